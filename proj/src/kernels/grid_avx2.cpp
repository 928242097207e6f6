#include <immintrin.h>

#include "conesing/grid_kernels.hpp"

namespace conesing::kernels::avx2 {

void grid_feasibility(std::span<const GridPolynomial> polys, std::int64_t j_begin,
                      std::span<std::uint8_t> out) {
  const __m256d lane_offsets = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const __m256d bound = _mm256_set1_pd(kFilterBound);

  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const std::int64_t j = j_begin + static_cast<std::int64_t>(i);
    const __m256d jd = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(j)), lane_offsets);
    const __m256d jj = _mm256_mul_pd(jd, jd);
    __m256d any_negative = _mm256_setzero_pd();
    __m256d all_positive = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    for (const auto& p : polys) {
      const __m256d t2 = _mm256_mul_pd(_mm256_set1_pd(p.c2()), jj);
      const __m256d t1 = _mm256_mul_pd(_mm256_set1_pd(p.c1n()), jd);
      const __m256d t0 = _mm256_set1_pd(p.c0n2());
      const __m256d v = _mm256_add_pd(_mm256_add_pd(t2, t1), t0);
      const __m256d mag = _mm256_add_pd(_mm256_add_pd(_mm256_and_pd(t2, abs_mask), _mm256_and_pd(t1, abs_mask)),
                                        _mm256_and_pd(t0, abs_mask));
      const __m256d err = _mm256_mul_pd(mag, bound);
      const __m256d neg_err = _mm256_sub_pd(_mm256_setzero_pd(), err);
      any_negative = _mm256_or_pd(any_negative, _mm256_cmp_pd(v, neg_err, _CMP_LT_OQ));
      all_positive = _mm256_and_pd(all_positive, _mm256_cmp_pd(v, err, _CMP_GT_OQ));
    }
    const int neg_bits = _mm256_movemask_pd(any_negative);
    const int pos_bits = _mm256_movemask_pd(all_positive);
    for (int lane = 0; lane < 4; ++lane) {
      const int bit = 1 << lane;
      if (neg_bits & bit) {
        out[i + lane] = 0;
      } else if (pos_bits & bit) {
        out[i + lane] = 1;
      } else {
        out[i + lane] = exact_feasibility(polys, j + lane);
      }
    }
  }
  if (i < n) {
    scalar::grid_feasibility(polys, j_begin + static_cast<std::int64_t>(i), out.subspan(i));
  }
}

}  // namespace conesing::kernels::avx2
