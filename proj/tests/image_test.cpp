#include "medwave/image.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include "medwave/error.hpp"
#include "test_support.hpp"

namespace medwave {
namespace {

using testing::TempDir;

void write_bytes(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

IoError::Code load_error_code(const std::filesystem::path& path) {
  try {
    load_pgm(path);
  } catch (const IoError& e) {
    return e.code();
  }
  ADD_FAILURE() << "load_pgm did not throw";
  return IoError::Code::kNotFound;
}

TEST(GrayImage, RejectsDegenerateShapesAndNonFiniteValues) {
  EXPECT_THROW(GrayImage(1, 4, std::vector<double>(4, 0.0)), DomainError);
  EXPECT_THROW(GrayImage(4, 1, std::vector<double>(4, 0.0)), DomainError);
  EXPECT_THROW(GrayImage(2, 2, std::vector<double>(3, 0.0)), DomainError);
  EXPECT_THROW(GrayImage(2, 2, {0.0, 1.0, std::nan(""), 2.0}), DomainError);
  EXPECT_THROW(GrayImage(2, 2, {0.0, 1.0, std::numeric_limits<double>::infinity(), 2.0}),
               DomainError);
}

TEST(GrayImage, RowMajorIndexing) {
  const GrayImage img(3, 2, {0, 1, 2, 10, 11, 12});
  EXPECT_EQ(img(2, 0), 2.0);
  EXPECT_EQ(img(0, 1), 10.0);
  EXPECT_EQ(img.plane().row(1)[2], 12.0);
}

TEST(ClipRound, HalfUpAndClamp) {
  const GrayImage out = clip_round(GrayImage(2, 2, {127.5, -3.2, 200.0, 254.49}));
  EXPECT_EQ(out(0, 0), 128.0);
  EXPECT_EQ(out(1, 0), 0.0);
  EXPECT_EQ(out(0, 1), 200.0);
  EXPECT_EQ(out(1, 1), 254.0);
}

TEST(ClipRound, IdentityOnByteValuedImages) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GrayImage img = testing::random_byte_image(7 + seed, 5 + seed % 3, seed);
    EXPECT_EQ(clip_round(img), img);
  }
}

TEST(Clip, ClampsWithoutRounding) {
  const GrayImage out = clip(GrayImage(2, 2, {-1.0, 12.25, 255.5, 254.75}));
  EXPECT_EQ(out(0, 0), 0.0);
  EXPECT_EQ(out(1, 0), 12.25);
  EXPECT_EQ(out(0, 1), 255.0);
  EXPECT_EQ(out(1, 1), 254.75);
}

TEST(Pgm, LoadsTwoByTwo) {
  TempDir dir;
  write_bytes(dir / "a.pgm", std::string("P5\n2 2\n255\n") + '\x00' + '\x80' + '\xff' + '\x40');
  const GrayImage img = load_pgm(dir / "a.pgm");
  ASSERT_EQ(img.width(), 2u);
  ASSERT_EQ(img.height(), 2u);
  EXPECT_EQ(std::vector<double>(img.values().begin(), img.values().end()),
            (std::vector<double>{0, 128, 255, 64}));
}

TEST(Pgm, ToleratesCommentsInHeader) {
  TempDir dir;
  write_bytes(dir / "c.pgm", std::string("P5\n# made by hand\n2 2\n255\n") + "abcd");
  EXPECT_EQ(load_pgm(dir / "c.pgm")(1, 1), static_cast<double>('d'));
}

TEST(Pgm, SaveRoundsAndClips) {
  TempDir dir;
  save_pgm(GrayImage(2, 2, {0.4, 254.6, -10.0, 300.0}), dir / "r.pgm");
  EXPECT_EQ(read_bytes(dir / "r.pgm"),
            std::string("P5\n2 2\n255\n") + '\x00' + '\xff' + '\x00' + '\xff');
}

TEST(Pgm, RoundTripIsExactForByteImages) {
  TempDir dir;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GrayImage img = testing::random_byte_image(2 + seed * 5, 2 + seed * 3, seed);
    save_pgm(img, dir / "x.pgm");
    const std::string first = read_bytes(dir / "x.pgm");
    EXPECT_EQ(load_pgm(dir / "x.pgm"), img);
    save_pgm(load_pgm(dir / "x.pgm"), dir / "x.pgm");
    EXPECT_EQ(read_bytes(dir / "x.pgm"), first);
  }
}

TEST(Pgm, RoundTripOfRealImageEqualsClipRound) {
  TempDir dir;
  const GrayImage img(testing::random_plane(9, 4, 3, -40.0, 300.0));
  save_pgm(img, dir / "y.pgm");
  EXPECT_EQ(load_pgm(dir / "y.pgm"), clip_round(img));
}

TEST(Pgm, DistinctErrors) {
  TempDir dir;
  EXPECT_EQ(load_error_code(dir / "missing.pgm"), IoError::Code::kNotFound);

  write_bytes(dir / "ascii.pgm", "P2\n2 2\n255\n0 1 2 3\n");
  EXPECT_EQ(load_error_code(dir / "ascii.pgm"), IoError::Code::kMalformedHeader);

  write_bytes(dir / "garbage.pgm", "P5\nwide 2\n255\n");
  EXPECT_EQ(load_error_code(dir / "garbage.pgm"), IoError::Code::kMalformedHeader);

  write_bytes(dir / "deep.pgm", "P5\n2 2\n65535\n12345678");
  EXPECT_EQ(load_error_code(dir / "deep.pgm"), IoError::Code::kUnsupportedMaxval);

  write_bytes(dir / "short.pgm", "P5\n2 2\n255\nabc");
  EXPECT_EQ(load_error_code(dir / "short.pgm"), IoError::Code::kTruncatedPayload);
}

TEST(Pgm, UnwritablePath) {
  TempDir dir;
  try {
    save_pgm(testing::constant_image(2, 2, 1.0), dir / "no-such-dir" / "out.pgm");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_EQ(e.code(), IoError::Code::kUnwritable);
  }
}

}  // namespace
}  // namespace medwave
