#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace medwave {

/// Row-major real-valued 2D array. Used for whole images and for sub-bands.
class Plane {
 public:
  Plane() = default;
  Plane(std::size_t width, std::size_t height, double fill = 0.0);
  Plane(std::size_t width, std::size_t height, std::vector<double> values);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double& operator()(std::size_t x, std::size_t y) { return values_[y * width_ + x]; }
  double operator()(std::size_t x, std::size_t y) const { return values_[y * width_ + x]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> row(std::size_t y) noexcept { return {values_.data() + y * width_, width_}; }
  std::span<const double> row(std::size_t y) const noexcept {
    return {values_.data() + y * width_, width_};
  }

  bool same_shape(const Plane& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> values_;
};

/// Immutable grayscale image with nominal 0..255 intensities.
///
/// Intensities are real so noisy and filtered intermediates can be held without
/// quantization. Construction enforces width, height >= 2 and finite values.
class GrayImage {
 public:
  explicit GrayImage(Plane plane);
  GrayImage(std::size_t width, std::size_t height, std::vector<double> values);

  std::size_t width() const noexcept { return plane_.width(); }
  std::size_t height() const noexcept { return plane_.height(); }
  std::size_t pixel_count() const noexcept { return plane_.size(); }
  double operator()(std::size_t x, std::size_t y) const { return plane_(x, y); }
  std::span<const double> values() const noexcept { return plane_.values(); }
  const Plane& plane() const noexcept { return plane_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  Plane plane_;
};

/// Clamp to [0, 255] then round half-up to an integer.
GrayImage clip_round(const GrayImage& img);

/// Clamp to [0, 255] without quantizing.
GrayImage clip(const GrayImage& img);

GrayImage load_pgm(const std::filesystem::path& path);

/// Writes binary P5 with maxval 255; pixels go through clip_round first.
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

}  // namespace medwave
