#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "medwave/image.hpp"

namespace medwave::testing {

inline Plane random_plane(std::size_t w, std::size_t h, std::uint64_t seed, double lo = 0.0,
                          double hi = 255.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  Plane p(w, h);
  for (double& v : p.values()) v = dist(rng);
  return p;
}

inline GrayImage random_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  return GrayImage(random_plane(w, h, seed));
}

inline GrayImage random_byte_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  Plane p(w, h);
  for (double& v : p.values()) v = dist(rng);
  return GrayImage(std::move(p));
}

inline GrayImage constant_image(std::size_t w, std::size_t h, double value) {
  return GrayImage(Plane(w, h, value));
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("medwave-test-" + std::to_string(std::random_device{}()) + "-" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace medwave::testing
