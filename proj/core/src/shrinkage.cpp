#include "medwave/shrinkage.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "medwave/error.hpp"

namespace medwave {

namespace {

bool keeps(double c, const Threshold& th, ThresholdRule rule) {
  if (th.kills_band()) return false;
  return rule == ThresholdRule::kMagnitude ? std::abs(c) >= th.level() : c >= th.level();
}

}  // namespace

Threshold Threshold::value(double th) {
  if (!(th >= 0.0) || !std::isfinite(th)) {
    throw DomainError("threshold: level must be finite and >= 0");
  }
  return Threshold(th, false);
}

double estimate_noise_sigma(std::span<const double> band) {
  if (band.empty()) throw DomainError("estimate_noise_sigma: empty band");
  std::vector<double> magnitudes(band.size());
  std::ranges::transform(band, magnitudes.begin(), [](double v) { return std::abs(v); });

  const std::size_t n = magnitudes.size();
  const auto upper = magnitudes.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(magnitudes.begin(), upper, magnitudes.end());
  double median = *upper;
  if (n % 2 == 0) {
    median = 0.5 * (median + *std::max_element(magnitudes.begin(), upper));
  }
  return median / kMadToSigma;
}

double estimate_noise_sigma(const Plane& band) { return estimate_noise_sigma(band.values()); }

double subband_std(std::span<const double> values) {
  if (values.empty()) throw DomainError("subband_std: empty input");
  const auto n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double sum_sq = 0.0;
  for (double v : values) sum_sq += (v - mean) * (v - mean);
  return std::sqrt(sum_sq / n);
}

double subband_std(const Plane& band) { return subband_std(band.values()); }

Threshold compute_threshold(double sigma_hat, double sigma_x) {
  if (!(sigma_hat >= 0.0) || !(sigma_x >= 0.0)) {
    throw DomainError("compute_threshold: sigma_hat and sigma_x must be >= 0");
  }
  if (sigma_hat == 0.0) return Threshold::value(0.0);
  if (sigma_x == 0.0) return Threshold::kill_band();
  return Threshold::value(sigma_hat * sigma_hat / sigma_x);
}

Plane hard_threshold(const Plane& band, const Threshold& th, ThresholdRule rule) {
  Plane out(band.width(), band.height());
  std::ranges::transform(band.values(), out.values().begin(),
                         [&](double c) { return keeps(c, th, rule) ? c : 0.0; });
  return out;
}

std::size_t count_zeroed(const Plane& band, const Threshold& th, ThresholdRule rule) {
  return static_cast<std::size_t>(std::ranges::count_if(
      band.values(), [&](double c) { return c != 0.0 && !keeps(c, th, rule); }));
}

ThresholdReport shrink_details(SubbandSet& bands, ThresholdRule rule) {
  ThresholdReport report;
  report.sigma_hat = estimate_noise_sigma(bands.diagonal);
  for (DetailBand b : kDetailBands) {
    Plane& plane = bands.detail(b);
    BandThreshold& entry = report.bands[static_cast<std::size_t>(b)];
    entry.sigma_x = subband_std(plane);
    entry.threshold = compute_threshold(report.sigma_hat, entry.sigma_x);
    entry.zeroed = count_zeroed(plane, entry.threshold, rule);
    plane = hard_threshold(plane, entry.threshold, rule);
  }
  return report;
}

}  // namespace medwave
