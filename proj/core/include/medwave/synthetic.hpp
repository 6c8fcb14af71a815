#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "medwave/image.hpp"

namespace medwave {

struct NamedImage {
  std::string name;
  GrayImage image;
};

enum class SyntheticKind { kGradient, kCheckerboard, kDisks, kGrating, kBandNoise };

/// Deterministic test images in the 0..255 byte range, all integer-valued.
GrayImage synthetic_image(SyntheticKind kind, std::size_t size = 256);

/// Five synthetic stand-ins for the standard test images, named "synth-*".
std::vector<NamedImage> synthetic_corpus(std::size_t size = 256);

}  // namespace medwave
