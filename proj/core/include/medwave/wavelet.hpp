#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "medwave/image.hpp"

namespace medwave {

enum class WaveletFamily { kHaar, kDaubechies2, kDaubechies4, kSymlet4 };

/// Signal extension used by the analysis filters at the plane borders.
///
/// kPeriodic gives exact perfect reconstruction. kSymmetric reflects the
/// signal (half-sample symmetric) during analysis and uses the adjoint for
/// synthesis, so it reconstructs exactly only away from the borders (and
/// everywhere for Haar).
enum class Boundary { kPeriodic, kSymmetric };

struct WaveletSpec {
  WaveletFamily family = WaveletFamily::kHaar;
  Boundary boundary = Boundary::kPeriodic;
};

/// Orthonormal two-channel filter bank. highpass[n] = (-1)^n lowpass[L-1-n].
struct FilterBank {
  std::span<const double> lowpass;
  std::span<const double> highpass;
};

FilterBank filter_bank(WaveletFamily family);

std::string_view to_string(WaveletFamily family);
std::string_view to_string(Boundary boundary);
std::optional<WaveletFamily> parse_wavelet_family(std::string_view name);
std::optional<Boundary> parse_boundary(std::string_view name);

enum class DetailBand { kHorizontal, kVertical, kDiagonal };

/// One-level 2D decomposition.
///
/// Orientation convention, with "row" meaning filtering along x:
///   approx     = row lowpass,  column lowpass
///   horizontal = row lowpass,  column highpass
///   vertical   = row highpass, column lowpass
///   diagonal   = row highpass, column highpass  (the HH band)
struct SubbandSet {
  Plane approx;
  Plane horizontal;
  Plane vertical;
  Plane diagonal;
  WaveletSpec spec;
  std::size_t width = 0;   // original image width, before any odd-size padding
  std::size_t height = 0;

  Plane& detail(DetailBand band);
  const Plane& detail(DetailBand band) const;
};

inline constexpr DetailBand kDetailBands[] = {DetailBand::kHorizontal, DetailBand::kVertical,
                                              DetailBand::kDiagonal};

/// Odd dimensions are padded by repeating the last row/column; idwt2 crops it again.
SubbandSet dwt2(const Plane& plane, const WaveletSpec& spec);
SubbandSet dwt2(const GrayImage& img, const WaveletSpec& spec);

Plane idwt2_plane(const SubbandSet& bands);
GrayImage idwt2(const SubbandSet& bands);

}  // namespace medwave
