#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "medwave/image.hpp"

namespace medwave {

/// Additive Gaussian noise parameters: N(mean, sigma^2) drawn from a stream seeded by `seed`.
struct NoiseSpec {
  double mean = 0.0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Gaussian probability density at `g`. Throws DomainError when sigma is not positive.
double gaussian_pdf(double g, const NoiseSpec& spec);

/// Standard normal variates from a seeded mt19937_64 via the Marsaglia polar method.
///
/// Unlike std::normal_distribution the sequence is fixed across standard
/// library implementations, so reports are reproducible everywhere.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform_open();  // (-1, 1)

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// w = s + n with n ~ N(mean, sigma^2) i.i.d. per pixel. The result is not clipped.
GrayImage add_gaussian_noise(const GrayImage& img, const NoiseSpec& spec);

/// Per-(image, sigma) stream seed derived from the run's master seed.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view image_name,
                                 double sigma);

}  // namespace medwave
