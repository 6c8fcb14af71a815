#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "medwave/image.hpp"
#include "medwave/wavelet.hpp"

namespace medwave {

/// Normal-distribution MAD factor used by the robust median estimator.
inline constexpr double kMadToSigma = 0.6745;

/// Hard-threshold level for one detail band, or the band-kill sentinel that
/// zeroes the whole band.
class Threshold {
 public:
  static Threshold value(double th);
  static Threshold kill_band() { return Threshold(0.0, true); }

  bool kills_band() const noexcept { return kill_; }
  /// Meaningless when kills_band().
  double level() const noexcept { return level_; }

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  Threshold(double level, bool kill) : level_(level), kill_(kill) {}

  double level_;
  bool kill_;
};

/// kMagnitude keeps c when |c| >= th. kSigned keeps c when c >= th, which
/// zeroes every negative coefficient; it is only useful for comparison runs.
enum class ThresholdRule { kMagnitude, kSigned };

/// median(|x|) / 0.6745, the noise standard deviation (not the variance).
double estimate_noise_sigma(std::span<const double> band);
double estimate_noise_sigma(const Plane& band);

/// Population standard deviation (divisor n).
double subband_std(std::span<const double> values);
double subband_std(const Plane& band);

/// sigma_hat^2 / sigma_x.
///
/// A noise-free estimate (sigma_hat == 0) yields 0 so every coefficient is
/// kept; otherwise a zero-spread band (sigma_x == 0) yields the kill sentinel.
Threshold compute_threshold(double sigma_hat, double sigma_x);

Plane hard_threshold(const Plane& band, const Threshold& th,
                     ThresholdRule rule = ThresholdRule::kMagnitude);

/// Number of coefficients hard_threshold() would set to zero (already-zero ones excluded).
std::size_t count_zeroed(const Plane& band, const Threshold& th,
                         ThresholdRule rule = ThresholdRule::kMagnitude);

struct BandThreshold {
  double sigma_x = 0.0;
  Threshold threshold = Threshold::value(0.0);
  std::size_t zeroed = 0;
};

struct ThresholdReport {
  double sigma_hat = 0.0;
  std::array<BandThreshold, 3> bands;  // indexed in kDetailBands order: H, V, D

  const BandThreshold& band(DetailBand b) const { return bands[static_cast<std::size_t>(b)]; }
};

/// Estimates sigma_hat from the diagonal band, derives one threshold per
/// detail band and applies it in place. The approximation band is untouched.
ThresholdReport shrink_details(SubbandSet& bands, ThresholdRule rule = ThresholdRule::kMagnitude);

}  // namespace medwave
