#include <cmath>

#include "conesing/grid_kernels.hpp"

namespace conesing::kernels::scalar {

void grid_feasibility(std::span<const GridPolynomial> polys, std::int64_t j_begin,
                      std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t j = j_begin + static_cast<std::int64_t>(i);
    const double jd = static_cast<double>(j);
    bool any_negative = false;
    bool all_positive = true;
    for (const auto& p : polys) {
      const double t2 = p.c2() * (jd * jd);
      const double t1 = p.c1n() * jd;
      const double t0 = p.c0n2();
      const double v = (t2 + t1) + t0;
      const double err = ((std::fabs(t2) + std::fabs(t1)) + std::fabs(t0)) * kFilterBound;
      // NaN/inf compare false on both sides and fall through to the exact path.
      any_negative |= v < -err;
      all_positive &= v > err;
    }
    if (any_negative) {
      out[i] = 0;
    } else if (all_positive) {
      out[i] = 1;
    } else {
      out[i] = exact_feasibility(polys, j);
    }
  }
}

}  // namespace conesing::kernels::scalar
