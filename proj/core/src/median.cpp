#include "medwave/median.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "medwave/error.hpp"

namespace medwave {

Plane median_filter(const Plane& plane, int window) {
  if (window < 3 || window % 2 == 0) {
    throw DomainError("median: window must be odd and >= 3, got " + std::to_string(window));
  }
  const auto k = static_cast<std::size_t>(window);
  if (k > plane.width() || k > plane.height()) {
    throw DomainError("median: window " + std::to_string(window) + " exceeds plane size " +
                      std::to_string(plane.width()) + "x" + std::to_string(plane.height()));
  }

  const auto radius = static_cast<std::ptrdiff_t>(k / 2);
  const auto w = static_cast<std::ptrdiff_t>(plane.width());
  const auto h = static_cast<std::ptrdiff_t>(plane.height());
  Plane out(plane.width(), plane.height());
  std::vector<double> neighborhood(k * k);
  const auto middle = neighborhood.begin() + static_cast<std::ptrdiff_t>(k * k / 2);

  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      std::size_t n = 0;
      for (std::ptrdiff_t dy = -radius; dy <= radius; ++dy) {
        const auto sy = static_cast<std::size_t>(std::clamp(y + dy, std::ptrdiff_t{0}, h - 1));
        for (std::ptrdiff_t dx = -radius; dx <= radius; ++dx) {
          const auto sx = static_cast<std::size_t>(std::clamp(x + dx, std::ptrdiff_t{0}, w - 1));
          neighborhood[n++] = plane(sx, sy);
        }
      }
      std::nth_element(neighborhood.begin(), middle, neighborhood.end());
      out(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) = *middle;
    }
  }
  return out;
}

GrayImage median_filter(const GrayImage& img, int window) {
  return GrayImage(median_filter(img.plane(), window));
}

}  // namespace medwave
