#pragma once

// Feasibility scan over the rational grid s = j/N.
//
// Each constraint is an integer polynomial a0 + a1 s + a2 s^2, evaluated at
// s = j/N as a2 j^2 + a1 N j + a0 N^2 (same sign). Kernels evaluate in
// double precision with a forward error bound and resolve every lane whose
// sign is not certified by exact integer evaluation, so all variants return
// identical, exact results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "conesing/exactnum.hpp"

namespace conesing::kernels {

enum class SimdLevel { Scalar, Avx2 };

const char* to_string(SimdLevel level) noexcept;

/// Best level supported by both this build and the running CPU.
SimdLevel detected_simd_level() noexcept;
bool simd_level_supported(SimdLevel level) noexcept;
SimdLevel active_simd_level() noexcept;
/// Overrides dispatch (tests, benchmarks); throws if unsupported.
void set_simd_level(SimdLevel level);

class GridPolynomial {
 public:
  GridPolynomial(Integer a0, Integer a1, Integer a2, long resolution);

  /// Exact sign at s = j/N.
  int exact_sign(std::int64_t j) const;

  // Double images: c2 = a2, c1n = a1 N, c0n2 = a0 N^2.
  double c2() const { return c2_; }
  double c1n() const { return c1n_; }
  double c0n2() const { return c0n2_; }

 private:
  Integer a0_, a1_, a2_;
  Integer n_;
  double c2_, c1n_, c0n2_;
};

/// Relative factor of the certified error bound, in units of |t2|+|t1|+|t0|.
inline constexpr double kFilterBound = 16.0 * 1.1102230246251565e-16;

/// Largest |j| for which j converts to double exactly.
inline constexpr std::int64_t kMaxGridIndex = std::int64_t{1} << 52;

/// out[i] = 1 iff every polynomial is >= 0 at j = j_begin + i.
void grid_feasibility(std::span<const GridPolynomial> polys, std::int64_t j_begin,
                      std::span<std::uint8_t> out);

/// Shared exact path used for uncertified lanes.
std::uint8_t exact_feasibility(std::span<const GridPolynomial> polys, std::int64_t j);

namespace scalar {
void grid_feasibility(std::span<const GridPolynomial> polys, std::int64_t j_begin,
                      std::span<std::uint8_t> out);
}

#if defined(CONESING_HAVE_AVX2)
namespace avx2 {
void grid_feasibility(std::span<const GridPolynomial> polys, std::int64_t j_begin,
                      std::span<std::uint8_t> out);
}
#endif

}  // namespace conesing::kernels
