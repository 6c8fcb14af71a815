#pragma once

#include "medwave/image.hpp"

namespace medwave {

/// Exact sliding-window median with replicate (clamp-to-edge) borders.
///
/// `window` must be odd, >= 3 and no larger than either plane dimension.
Plane median_filter(const Plane& plane, int window = 3);
GrayImage median_filter(const GrayImage& img, int window = 3);

}  // namespace medwave
