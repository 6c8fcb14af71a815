#include "medwave/wavelet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "medwave/error.hpp"

namespace medwave {

namespace {

// Scaling (lowpass) coefficients, obtained by spectral factorization of the
// Daubechies polynomial at 50 digits. Daubechies keeps the minimum-phase root
// set, Symlet the least-asymmetric one.
constexpr std::array<double, 2> kHaarLow = {0.70710678118654752440, 0.70710678118654752440};

constexpr std::array<double, 4> kDb2Low = {
    0.4829629131445341433749, 0.8365163037378079055753, 0.2241438680420133810260,
    -0.1294095225512603811744};

constexpr std::array<double, 8> kDb4Low = {
    0.2303778133088965008633,  0.7148465705529156470899,  0.6308807679298589078817,
    -0.02798376941685985421141, -0.1870348117190930840796, 0.03084138183556076362722,
    0.03288301166688519973541, -0.01059740178506903210488};

constexpr std::array<double, 8> kSym4Low = {
    0.03222310060405146787162, -0.01260396726203130375392, -0.09921954357663353258521,
    0.2978577956053060514029,  0.8037387518051320808788,  0.4976186676327749899796,
    -0.02963552764600249176437, -0.07576571478950221322775};

template <std::size_t N>
constexpr std::array<double, N> quadrature_mirror(const std::array<double, N>& low) {
  std::array<double, N> high{};
  for (std::size_t n = 0; n < N; ++n) {
    high[n] = (n % 2 == 0 ? 1.0 : -1.0) * low[N - 1 - n];
  }
  return high;
}

constexpr auto kHaarHigh = quadrature_mirror(kHaarLow);
constexpr auto kDb2High = quadrature_mirror(kDb2Low);
constexpr auto kDb4High = quadrature_mirror(kDb4Low);
constexpr auto kSym4High = quadrature_mirror(kSym4Low);

std::size_t extend(std::ptrdiff_t i, std::size_t n, Boundary boundary) {
  const auto len = static_cast<std::ptrdiff_t>(n);
  if (boundary == Boundary::kPeriodic) {
    return static_cast<std::size_t>(((i % len) + len) % len);
  }
  const std::ptrdiff_t period = 2 * len;
  std::ptrdiff_t m = ((i % period) + period) % period;
  if (m >= len) m = period - 1 - m;
  return static_cast<std::size_t>(m);
}

// x has even length n; low/high receive n/2 samples each.
void analyze(std::span<const double> x, std::span<double> low, std::span<double> high,
             const FilterBank& bank, Boundary boundary) {
  const std::size_t half = x.size() / 2;
  const std::size_t taps = bank.lowpass.size();
  for (std::size_t k = 0; k < half; ++k) {
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t t = 0; t < taps; ++t) {
      const double v = x[extend(static_cast<std::ptrdiff_t>(2 * k + t), x.size(), boundary)];
      lo += bank.lowpass[t] * v;
      hi += bank.highpass[t] * v;
    }
    low[k] = lo;
    high[k] = hi;
  }
}

// Adjoint of analyze(); its exact inverse for periodic extension.
void synthesize(std::span<const double> low, std::span<const double> high, std::span<double> x,
                const FilterBank& bank, Boundary boundary) {
  std::ranges::fill(x, 0.0);
  const std::size_t taps = bank.lowpass.size();
  for (std::size_t k = 0; k < low.size(); ++k) {
    for (std::size_t t = 0; t < taps; ++t) {
      const std::size_t m = extend(static_cast<std::ptrdiff_t>(2 * k + t), x.size(), boundary);
      x[m] += bank.lowpass[t] * low[k] + bank.highpass[t] * high[k];
    }
  }
}

Plane pad_to_even(const Plane& plane) {
  const std::size_t w = plane.width() + plane.width() % 2;
  const std::size_t h = plane.height() + plane.height() % 2;
  if (w == plane.width() && h == plane.height()) return plane;
  Plane out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    const std::size_t sy = std::min(y, plane.height() - 1);
    for (std::size_t x = 0; x < w; ++x) {
      out(x, y) = plane(std::min(x, plane.width() - 1), sy);
    }
  }
  return out;
}

// Row pass: returns (row-lowpass, row-highpass) planes of size (w/2) x h.
std::pair<Plane, Plane> analyze_rows(const Plane& in, const FilterBank& bank, Boundary boundary) {
  const std::size_t half = in.width() / 2;
  Plane low(half, in.height());
  Plane high(half, in.height());
  for (std::size_t y = 0; y < in.height(); ++y) {
    analyze(in.row(y), low.row(y), high.row(y), bank, boundary);
  }
  return {std::move(low), std::move(high)};
}

// Column pass: returns (column-lowpass, column-highpass) planes of size w x (h/2).
std::pair<Plane, Plane> analyze_columns(const Plane& in, const FilterBank& bank,
                                        Boundary boundary) {
  const std::size_t half = in.height() / 2;
  Plane low(in.width(), half);
  Plane high(in.width(), half);
  std::vector<double> column(in.height());
  std::vector<double> lo(half);
  std::vector<double> hi(half);
  for (std::size_t x = 0; x < in.width(); ++x) {
    for (std::size_t y = 0; y < in.height(); ++y) column[y] = in(x, y);
    analyze(column, lo, hi, bank, boundary);
    for (std::size_t y = 0; y < half; ++y) {
      low(x, y) = lo[y];
      high(x, y) = hi[y];
    }
  }
  return {std::move(low), std::move(high)};
}

Plane synthesize_columns(const Plane& low, const Plane& high, const FilterBank& bank,
                         Boundary boundary) {
  const std::size_t half = low.height();
  Plane out(low.width(), 2 * half);
  std::vector<double> lo(half);
  std::vector<double> hi(half);
  std::vector<double> column(2 * half);
  for (std::size_t x = 0; x < low.width(); ++x) {
    for (std::size_t y = 0; y < half; ++y) {
      lo[y] = low(x, y);
      hi[y] = high(x, y);
    }
    synthesize(lo, hi, column, bank, boundary);
    for (std::size_t y = 0; y < column.size(); ++y) out(x, y) = column[y];
  }
  return out;
}

Plane synthesize_rows(const Plane& low, const Plane& high, const FilterBank& bank,
                      Boundary boundary) {
  Plane out(2 * low.width(), low.height());
  for (std::size_t y = 0; y < low.height(); ++y) {
    synthesize(low.row(y), high.row(y), out.row(y), bank, boundary);
  }
  return out;
}

}  // namespace

FilterBank filter_bank(WaveletFamily family) {
  switch (family) {
    case WaveletFamily::kHaar:
      return {kHaarLow, kHaarHigh};
    case WaveletFamily::kDaubechies2:
      return {kDb2Low, kDb2High};
    case WaveletFamily::kDaubechies4:
      return {kDb4Low, kDb4High};
    case WaveletFamily::kSymlet4:
      return {kSym4Low, kSym4High};
  }
  throw DomainError("wavelet: unknown family");
}

std::string_view to_string(WaveletFamily family) {
  switch (family) {
    case WaveletFamily::kHaar:
      return "haar";
    case WaveletFamily::kDaubechies2:
      return "db2";
    case WaveletFamily::kDaubechies4:
      return "db4";
    case WaveletFamily::kSymlet4:
      return "sym4";
  }
  return "?";
}

std::string_view to_string(Boundary boundary) {
  return boundary == Boundary::kPeriodic ? "periodic" : "symmetric";
}

std::optional<WaveletFamily> parse_wavelet_family(std::string_view name) {
  for (auto f : {WaveletFamily::kHaar, WaveletFamily::kDaubechies2, WaveletFamily::kDaubechies4,
                 WaveletFamily::kSymlet4}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<Boundary> parse_boundary(std::string_view name) {
  if (name == "periodic") return Boundary::kPeriodic;
  if (name == "symmetric") return Boundary::kSymmetric;
  return std::nullopt;
}

Plane& SubbandSet::detail(DetailBand band) {
  switch (band) {
    case DetailBand::kHorizontal:
      return horizontal;
    case DetailBand::kVertical:
      return vertical;
    case DetailBand::kDiagonal:
      break;
  }
  return diagonal;
}

const Plane& SubbandSet::detail(DetailBand band) const {
  return const_cast<SubbandSet&>(*this).detail(band);
}

SubbandSet dwt2(const Plane& plane, const WaveletSpec& spec) {
  if (plane.width() < 2 || plane.height() < 2) {
    throw DomainError("dwt2: input must be at least 2x2, got " + std::to_string(plane.width()) +
                      "x" + std::to_string(plane.height()));
  }
  const FilterBank bank = filter_bank(spec.family);
  const Plane padded = pad_to_even(plane);

  auto [row_low, row_high] = analyze_rows(padded, bank, spec.boundary);
  auto [ll, lh] = analyze_columns(row_low, bank, spec.boundary);
  auto [hl, hh] = analyze_columns(row_high, bank, spec.boundary);

  return SubbandSet{std::move(ll), std::move(lh), std::move(hl), std::move(hh),
                    spec,          plane.width(), plane.height()};
}

SubbandSet dwt2(const GrayImage& img, const WaveletSpec& spec) { return dwt2(img.plane(), spec); }

Plane idwt2_plane(const SubbandSet& bands) {
  const Plane& a = bands.approx;
  for (const Plane* p : {&bands.horizontal, &bands.vertical, &bands.diagonal}) {
    if (!p->same_shape(a)) throw DomainError("idwt2: sub-band dimensions differ");
  }
  if (a.empty()) throw DomainError("idwt2: empty sub-bands");
  if ((bands.width + 1) / 2 != a.width() || (bands.height + 1) / 2 != a.height()) {
    throw DomainError("idwt2: sub-band size does not match recorded image size");
  }

  const FilterBank bank = filter_bank(bands.spec.family);
  const Plane row_low = synthesize_columns(bands.approx, bands.horizontal, bank, bands.spec.boundary);
  const Plane row_high = synthesize_columns(bands.vertical, bands.diagonal, bank, bands.spec.boundary);
  Plane full = synthesize_rows(row_low, row_high, bank, bands.spec.boundary);

  if (full.width() == bands.width && full.height() == bands.height) return full;
  Plane cropped(bands.width, bands.height);
  for (std::size_t y = 0; y < bands.height; ++y) {
    for (std::size_t x = 0; x < bands.width; ++x) cropped(x, y) = full(x, y);
  }
  return cropped;
}

GrayImage idwt2(const SubbandSet& bands) { return GrayImage(idwt2_plane(bands)); }

}  // namespace medwave
