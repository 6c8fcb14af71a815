#include "medwave/image.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "medwave/error.hpp"

namespace medwave {

Plane::Plane(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), values_(width * height, fill) {}

Plane::Plane(std::size_t width, std::size_t height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (values_.size() != width_ * height_) {
    throw DomainError("plane: value count " + std::to_string(values_.size()) +
                      " does not match " + std::to_string(width_) + "x" +
                      std::to_string(height_));
  }
}

GrayImage::GrayImage(Plane plane) : plane_(std::move(plane)) {
  if (plane_.width() < 2 || plane_.height() < 2) {
    throw DomainError("image: width and height must be at least 2, got " +
                      std::to_string(plane_.width()) + "x" + std::to_string(plane_.height()));
  }
  for (double v : plane_.values()) {
    if (!std::isfinite(v)) throw DomainError("image: non-finite intensity");
  }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<double> values)
    : GrayImage(Plane(width, height, std::move(values))) {}

namespace {

double round_half_up(double v) { return std::floor(v + 0.5); }

template <typename F>
GrayImage map_pixels(const GrayImage& img, F f) {
  Plane out(img.width(), img.height());
  std::ranges::transform(img.values(), out.values().begin(), f);
  return GrayImage(std::move(out));
}

// Reads one whitespace-delimited header token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string token;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  while (c != EOF && !std::isspace(c)) {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  // The single whitespace byte after the token is consumed here, which is
  // what the format requires after maxval.
  return token;
}

std::size_t parse_dimension(const std::string& token, const std::filesystem::path& path) {
  if (token.empty() || !std::ranges::all_of(token, [](unsigned char ch) { return std::isdigit(ch); })) {
    throw IoError(IoError::Code::kMalformedHeader,
                  "pgm: malformed header in " + path.string() + " (bad integer '" + token + "')");
  }
  return std::stoul(token);
}

}  // namespace

GrayImage clip_round(const GrayImage& img) {
  return map_pixels(img, [](double v) { return round_half_up(std::clamp(v, 0.0, 255.0)); });
}

GrayImage clip(const GrayImage& img) {
  return map_pixels(img, [](double v) { return std::clamp(v, 0.0, 255.0); });
}

GrayImage load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(IoError::Code::kNotFound, "pgm: cannot open " + path.string());
  }

  if (next_token(in) != "P5") {
    throw IoError(IoError::Code::kMalformedHeader,
                  "pgm: " + path.string() + " is not a binary PGM (expected magic P5)");
  }
  const std::size_t width = parse_dimension(next_token(in), path);
  const std::size_t height = parse_dimension(next_token(in), path);
  const std::size_t maxval = parse_dimension(next_token(in), path);
  if (maxval != 255) {
    throw IoError(IoError::Code::kUnsupportedMaxval,
                  "pgm: " + path.string() + " has maxval " + std::to_string(maxval) +
                      ", only 255 is supported");
  }
  if (width < 2 || height < 2) {
    throw IoError(IoError::Code::kMalformedHeader,
                  "pgm: " + path.string() + " has unsupported size " + std::to_string(width) +
                      "x" + std::to_string(height));
  }

  std::vector<unsigned char> bytes(width * height);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size()) {
    throw IoError(IoError::Code::kTruncatedPayload,
                  "pgm: " + path.string() + " is truncated (" + std::to_string(in.gcount()) +
                      " of " + std::to_string(bytes.size()) + " pixel bytes)");
  }
  return GrayImage(width, height, std::vector<double>(bytes.begin(), bytes.end()));
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError(IoError::Code::kUnwritable, "pgm: cannot write " + path.string());
  }
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";

  const GrayImage quantized = clip_round(img);
  std::vector<char> bytes(quantized.pixel_count());
  std::ranges::transform(quantized.values(), bytes.begin(),
                         [](double v) { return static_cast<char>(static_cast<unsigned char>(v)); });
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError(IoError::Code::kUnwritable, "pgm: write failed for " + path.string());
  }
}

}  // namespace medwave
