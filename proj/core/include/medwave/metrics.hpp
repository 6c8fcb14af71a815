#pragma once

#include <limits>
#include <string>

#include "medwave/image.hpp"

namespace medwave {

/// Peak intensity used by psnr(); fixed, never inferred from content.
inline constexpr double kPeakIntensity = 255.0;

/// Returned by psnr() when the images are identical.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

double mse(const GrayImage& original, const GrayImage& restored);

/// 10 log10(255^2 / mse) in dB; kInfinitePsnr when mse == 0.
double psnr(double mse_value);

/// Fixed 4-decimal rendering; "inf" for the infinite sentinel.
std::string format_db(double db);

}  // namespace medwave
