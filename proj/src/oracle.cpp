// Brute-force grid oracle for the pencil threshold. Deliberately shares no
// code with solve(): constraint polynomials are rebuilt from the pairing and
// the flip is located by scanning, then confirmed by direct membership tests.

#include <algorithm>
#include <vector>

#include "conesing/error.hpp"
#include "conesing/grid_kernels.hpp"
#include "conesing/threshold.hpp"

namespace conesing {

namespace {

struct RawPolynomial {
  Rat c0, c1, c2;
};

std::vector<RawPolynomial> raw_polynomials(const ThresholdProblem& p) {
  const auto& lat = p.surf.lattice;
  const DivClass& d = p.direction;
  const DivClass& b = p.offset;
  std::vector<RawPolynomial> out;
  if (const auto* q = std::get_if<QuadraticCone>(&p.surf.cone)) {
    const DivClass& h = q->ample_selector;
    out.push_back({pairing(lat, b, h), pairing(lat, d, h), Rat()});
    out.push_back({pairing(lat, b, b), pairing(lat, d, b) + pairing(lat, b, d), pairing(lat, d, d)});
  } else {
    for (const auto& l : std::get<PolyhedralCone>(p.surf.cone).inequalities) {
      DivClass functional(std::vector<Rat>(l.begin(), l.end()));
      RawPolynomial poly;
      for (std::size_t k = 0; k < l.size(); ++k) {
        poly.c0 += functional[k] * b[k];
        poly.c1 += functional[k] * d[k];
      }
      out.push_back(poly);
    }
  }
  return out;
}

kernels::GridPolynomial to_grid(const RawPolynomial& r, long resolution) {
  Integer l = 1;
  for (const Rat* c : {&r.c0, &r.c1, &r.c2}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c->den().get_mpz_t());
  auto scaled = [&](const Rat& c) { return Integer(c.num() * (l / c.den())); };
  return kernels::GridPolynomial(scaled(r.c0), scaled(r.c1), scaled(r.c2), resolution);
}

}  // namespace

Integer oracle_bound(const ThresholdProblem& p) {
  Rat reach;
  for (const auto& poly : raw_polynomials(p)) {
    if (!poly.c2.is_zero()) {
      // Cauchy bound on the roots of c2 s^2 + c1 s + c0.
      const Rat cauchy = Rat(1) + std::max(poly.c1.abs(), poly.c0.abs()) / poly.c2.abs();
      reach = std::max(reach, cauchy);
    } else if (!poly.c1.is_zero()) {
      reach = std::max(reach, (poly.c0 / poly.c1).abs());
    }
  }
  return (Rat(1) + reach).ceil();
}

RatInterval bracket_oracle(const ThresholdProblem& p, long resolution) {
  if (resolution < 1) throw Error(Errc::InvalidArgument, "oracle resolution must be positive");
  const Integer bound = oracle_bound(p);
  const Integer span_end = bound * resolution;
  if (!span_end.fits_slong_p() || span_end >= kernels::kMaxGridIndex) {
    throw Error(Errc::InvalidArgument, "oracle grid too large");
  }
  const std::int64_t last = span_end.get_si();

  std::vector<kernels::GridPolynomial> polys;
  for (const auto& r : raw_polynomials(p)) polys.push_back(to_grid(r, resolution));

  constexpr std::size_t kBlock = 1 << 14;
  std::vector<std::uint8_t> block(kBlock);
  std::uint8_t previous = 1;  // no flip may be reported at the left edge
  bool have_previous = false;
  for (std::int64_t j0 = -last; j0 <= last; j0 += static_cast<std::int64_t>(kBlock)) {
    const auto count = static_cast<std::size_t>(std::min<std::int64_t>(kBlock, last - j0 + 1));
    const std::span<std::uint8_t> view(block.data(), count);
    kernels::grid_feasibility(polys, j0, view);
    for (std::size_t i = 0; i < count; ++i) {
      if (have_previous && previous == 0 && view[i] == 1) {
        const std::int64_t j = j0 + static_cast<std::int64_t>(i);
        RatInterval cell{Rat(Integer(static_cast<long>(j - 1)), Integer(resolution)),
                         Rat(Integer(static_cast<long>(j)), Integer(resolution))};
        if (feasible_at(p, QuadNum(cell.lo)) || !feasible_at(p, QuadNum(cell.hi))) {
          throw Error(Errc::Internal, "grid scan disagrees with the exact membership test");
        }
        return cell;
      }
      previous = view[i];
      have_previous = true;
    }
  }
  throw Error(Errc::Infeasible, "no infeasible-to-feasible flip on [-" + bound.get_str() + ", " +
                                    bound.get_str() + "]");
}

}  // namespace conesing
