#include <atomic>
#include <cmath>

#include "conesing/error.hpp"
#include "conesing/grid_kernels.hpp"

namespace conesing::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(CONESING_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<SimdLevel>& level_slot() {
  static std::atomic<SimdLevel> slot{detected_simd_level()};
  return slot;
}

}  // namespace

const char* to_string(SimdLevel level) noexcept {
  switch (level) {
    case SimdLevel::Scalar: return "scalar";
    case SimdLevel::Avx2: return "avx2";
  }
  return "unknown";
}

bool simd_level_supported(SimdLevel level) noexcept {
  return level == SimdLevel::Scalar || (level == SimdLevel::Avx2 && cpu_has_avx2());
}

SimdLevel detected_simd_level() noexcept {
  return cpu_has_avx2() ? SimdLevel::Avx2 : SimdLevel::Scalar;
}

SimdLevel active_simd_level() noexcept { return level_slot().load(std::memory_order_relaxed); }

void set_simd_level(SimdLevel level) {
  if (!simd_level_supported(level)) {
    throw Error(Errc::InvalidArgument, std::string("SIMD level ") + to_string(level) + " not supported here");
  }
  level_slot().store(level, std::memory_order_relaxed);
}

GridPolynomial::GridPolynomial(Integer a0, Integer a1, Integer a2, long resolution)
    : a0_(std::move(a0)), a1_(std::move(a1)), a2_(std::move(a2)), n_(resolution) {
  if (resolution < 1) throw Error(Errc::InvalidArgument, "grid resolution must be positive");
  c2_ = a2_.get_d();
  c1n_ = Integer(a1_ * n_).get_d();
  c0n2_ = Integer(a0_ * n_ * n_).get_d();
}

int GridPolynomial::exact_sign(std::int64_t j) const {
  const Integer jj(static_cast<long>(j));
  const Integer v = a2_ * jj * jj + a1_ * n_ * jj + a0_ * n_ * n_;
  return sgn(v);
}

std::uint8_t exact_feasibility(std::span<const GridPolynomial> polys, std::int64_t j) {
  for (const auto& p : polys) {
    if (p.exact_sign(j) < 0) return 0;
  }
  return 1;
}

void grid_feasibility(std::span<const GridPolynomial> polys, std::int64_t j_begin,
                      std::span<std::uint8_t> out) {
  const std::int64_t j_end = j_begin + static_cast<std::int64_t>(out.size());
  if (j_begin <= -kMaxGridIndex || j_end >= kMaxGridIndex) {
    throw Error(Errc::InvalidArgument, "grid index outside the exactly representable range");
  }
#if defined(CONESING_HAVE_AVX2)
  if (active_simd_level() == SimdLevel::Avx2) {
    avx2::grid_feasibility(polys, j_begin, out);
    return;
  }
#endif
  scalar::grid_feasibility(polys, j_begin, out);
}

}  // namespace conesing::kernels
