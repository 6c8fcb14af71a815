#include "medwave/noise.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "medwave/error.hpp"

namespace medwave {

namespace {

void validate(const NoiseSpec& spec) {
  if (!std::isfinite(spec.mean)) throw DomainError("noise: mean must be finite");
  if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma)) {
    throw DomainError("noise: sigma must be finite and >= 0");
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

double gaussian_pdf(double g, const NoiseSpec& spec) {
  validate(spec);
  if (spec.sigma == 0.0) {
    throw DomainError("noise: gaussian_pdf is undefined for sigma == 0 (degenerate distribution)");
  }
  const double var = spec.sigma * spec.sigma;
  const double d = g - spec.mean;
  return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

double NormalStream::uniform_open() {
  // 53 random bits mapped to [0, 1), then to [-1, 1).
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = uniform_open();
    v = uniform_open();
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

GrayImage add_gaussian_noise(const GrayImage& img, const NoiseSpec& spec) {
  validate(spec);
  if (spec.sigma == 0.0 && spec.mean == 0.0) return img;

  NormalStream normal(spec.seed);
  Plane out(img.width(), img.height());
  auto dst = out.values();
  auto src = img.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i] = src[i] + spec.mean + spec.sigma * normal.next();
  }
  return GrayImage(std::move(out));
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view image_name,
                                 double sigma) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ fnv1a(image_name));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(sigma));
  return h;
}

}  // namespace medwave
