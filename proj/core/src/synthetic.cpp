#include "medwave/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "medwave/image.hpp"

namespace medwave {

namespace {

template <typename F>
GrayImage generate(std::size_t size, F f) {
  Plane p(size, size);
  const double n = static_cast<double>(size);
  for (std::size_t y = 0; y < size; ++y) {
    for (std::size_t x = 0; x < size; ++x) {
      const double v = f(static_cast<double>(x) / n, static_cast<double>(y) / n);
      p(x, y) = std::floor(std::clamp(v, 0.0, 255.0) + 0.5);
    }
  }
  return GrayImage(std::move(p));
}

// 3x3 box blur with wrap-around, applied in place.
void box_blur(Plane& p) {
  Plane src = p;
  const std::size_t w = p.width();
  const std::size_t h = p.height();
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      double sum = 0.0;
      for (std::size_t dy = 0; dy < 3; ++dy) {
        for (std::size_t dx = 0; dx < 3; ++dx) {
          sum += src((x + w + dx - 1) % w, (y + h + dy - 1) % h);
        }
      }
      p(x, y) = sum / 9.0;
    }
  }
}

GrayImage band_noise(std::size_t size) {
  std::mt19937_64 engine(0x5eedULL);
  Plane p(size, size);
  for (double& v : p.values()) v = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  for (int pass = 0; pass < 4; ++pass) box_blur(p);

  double lo = p.values()[0];
  double hi = lo;
  for (double v : p.values()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  for (double& v : p.values()) v = std::floor(30.0 + 190.0 * (v - lo) / (hi - lo) + 0.5);
  return GrayImage(std::move(p));
}

}  // namespace

GrayImage synthetic_image(SyntheticKind kind, std::size_t size) {
  using std::numbers::pi;
  switch (kind) {
    case SyntheticKind::kGradient:
      return generate(size, [](double u, double v) {
        return 20.0 + 150.0 * u + 60.0 * v * v + 15.0 * std::sin(3.0 * pi * u * v);
      });
    case SyntheticKind::kCheckerboard:
      return generate(size, [size](double u, double v) {
        const auto cells = static_cast<double>(size) / 16.0;
        const auto cx = static_cast<long>(u * cells);
        const auto cy = static_cast<long>(v * cells);
        return (cx + cy) % 2 == 0 ? 60.0 : 190.0;
      });
    case SyntheticKind::kDisks:
      return generate(size, [](double u, double v) {
        const double r1 = std::hypot(u - 0.35, v - 0.4);
        const double r2 = std::hypot(u - 0.7, v - 0.65);
        double value = 100.0 + 40.0 * u;
        if (r1 < 0.22) value = 220.0;
        if (r1 < 0.12) value = 40.0;
        if (r2 < 0.18) value = 160.0 - 60.0 * v;
        return value;
      });
    case SyntheticKind::kGrating:
      return generate(size, [](double u, double v) {
        const double freq = 6.0 + 26.0 * v;
        return 128.0 + 90.0 * std::sin(2.0 * pi * freq * u) * std::cos(2.0 * pi * 3.0 * v);
      });
    case SyntheticKind::kBandNoise:
      return band_noise(size);
  }
  return band_noise(size);
}

std::vector<NamedImage> synthetic_corpus(std::size_t size) {
  return {
      {"synth-bandnoise", synthetic_image(SyntheticKind::kBandNoise, size)},
      {"synth-checker", synthetic_image(SyntheticKind::kCheckerboard, size)},
      {"synth-disks", synthetic_image(SyntheticKind::kDisks, size)},
      {"synth-gradient", synthetic_image(SyntheticKind::kGradient, size)},
      {"synth-grating", synthetic_image(SyntheticKind::kGrating, size)},
  };
}

}  // namespace medwave
