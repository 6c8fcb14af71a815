#include "medwave/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "medwave/error.hpp"

namespace medwave {

double mse(const GrayImage& original, const GrayImage& restored) {
  if (original.width() != restored.width() || original.height() != restored.height()) {
    throw DomainError("mse: image dimensions differ");
  }
  const auto a = original.values();
  const auto b = restored.values();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = b[i] - a[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

double psnr(double mse_value) {
  if (!(mse_value >= 0.0)) throw DomainError("psnr: mse must be >= 0");
  if (mse_value == 0.0) return kInfinitePsnr;
  return 10.0 * std::log10(kPeakIntensity * kPeakIntensity / mse_value);
}

std::string format_db(double db) {
  if (std::isinf(db)) return db > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", db);
  return buf;
}

}  // namespace medwave
