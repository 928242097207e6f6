#include <doctest.h>

#include "conesing/presets.hpp"
#include "conesing/threshold.hpp"
#include "support/errors.hpp"
#include "support/oracle.hpp"

using namespace conesing;
using namespace conesing::testing;

namespace {

const Integer k17(17);

SurfaceDatum abelian_cover() { return build(PresetId{PresetKind::AbelianCover}).surf; }

SurfaceDatum p1xe(long d) { return build(PresetId{PresetKind::P1xE, d}).surf; }

ThresholdProblem minus_problem(const SurfaceDatum& s) { return make_problem(s, s.polarization, -s.canonical_class); }
ThresholdProblem plus_problem(const SurfaceDatum& s) { return make_problem(s, s.polarization, s.canonical_class); }

DivClass random_class(Rng& rng, std::size_t rank) {
  std::vector<Rat> v(rank);
  for (auto& x : v) x = rng.rational(6, 5);
  return DivClass(v);
}

ThresholdProblem random_problem(Rng& rng, bool quadratic) {
  const SurfaceDatum s = quadratic ? random_quadratic_surface(rng) : random_polyhedral_surface(rng);
  return make_problem(s, s.polarization, random_class(rng, s.lattice.rank()));
}

bool in_cell(const QuadNum& t, const RatInterval& cell) {
  return QuadNum(cell.lo) <= t && t <= QuadNum(cell.hi);
}

}  // namespace

TEST_CASE("preset A threshold is (7 + sqrt17)/16 pinned by the quadratic") {
  const auto r = solve(minus_problem(abelian_cover()));
  CHECK(r.t == QuadNum(Rat(Integer(7), Integer(16)), Rat(Integer(1), Integer(16)), k17));
  CHECK(r.attained);
  CHECK(r.discriminant == 17);
  REQUIRE(r.active);
  CHECK(r.active->kind == ConstraintKind::Quadratic);
  CHECK(r.active_label() == "quadratic");
}

TEST_CASE("preset A pencil constraints") {
  const auto cs = pencil_constraints(minus_problem(abelian_cover()));
  REQUIRE(cs.size() == 2);
  const auto& sel = cs[0];
  CHECK(sel.kind == ConstraintKind::Selector);
  CHECK(sel.c2 == Rat(0));
  CHECK(sel.c1.sign() > 0);
  CHECK(-sel.c0 / sel.c1 == Rat(Integer(2), Integer(5)));

  // Proportional to 8s^2 - 7s + 1 with a positive factor.
  const auto& quad = cs[1];
  CHECK(quad.kind == ConstraintKind::Quadratic);
  const Rat scale = quad.c2 / Rat(8);
  CHECK(scale.sign() > 0);
  CHECK(quad.c1 == scale * Rat(-7));
  CHECK(quad.c0 == scale * Rat(1));
}

TEST_CASE("preset A plus pencil: 8r^2 + 7r + 1 and 15r + 6") {
  const auto p = plus_problem(abelian_cover());
  const auto cs = pencil_constraints(p);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].c1 * Rat(6) == cs[0].c0 * Rat(15));
  const Rat scale = cs[1].c2 / Rat(8);
  CHECK(cs[1].c1 == scale * Rat(7));
  CHECK(cs[1].c0 == scale);
  CHECK(solve(p).t == QuadNum(Rat(Integer(-7), Integer(16)), Rat(Integer(1), Integer(16)), k17));
}

TEST_CASE("zero offset gives the apex") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const auto s = i % 2 ? random_quadratic_surface(rng) : random_polyhedral_surface(rng);
    const auto r = solve(make_problem(s, s.polarization, DivClass(s.lattice.rank())));
    CHECK(r.t == QuadNum());
    CHECK(r.attained);
  }
}

TEST_CASE("preset B thresholds") {
  const auto s = p1xe(1);
  CHECK(solve(plus_problem(s)).t == QuadNum(1));
  CHECK(solve(minus_problem(s)).t == QuadNum());
}

TEST_CASE("membership along the preset A pencil") {
  const auto p = minus_problem(abelian_cover());
  CHECK(feasible_at(p, QuadNum(1)));
  CHECK_FALSE(feasible_at(p, QuadNum(Rat(Integer(1), Integer(2)))));
  CHECK(feasible_at(p, solve(p).t));
}

TEST_CASE("direction must be strictly interior") {
  const auto s = abelian_cover();
  CHECK(error_code([&] { make_problem(s, div_class({1, 0, 0}), s.canonical_class); }) == Errc::InvalidArgument);
  CHECK(error_code([&] { make_problem(s, div_class({1, 1}), s.canonical_class); }) == Errc::DimensionMismatch);
}

TEST_CASE("ties go to the earliest constraint") {
  // Quadrant with L = (1,1), offset (-1,-1): both inequalities bind at s = 1.
  NSLattice lat({"e1", "e2"}, IntMatrix(int_rows({{0, 1}, {1, 0}})));
  const auto s = make_surface("q", lat, PolyhedralCone{int_rows({{1, 0}, {0, 1}})}, div_class({0, 0}), div_class({1, 1}));
  const auto r = solve(make_problem(s, s.polarization, div_class({-1, -1})));
  CHECK(r.t == QuadNum(1));
  CHECK(r.active_label() == "linear[0]");
}

TEST_CASE("tangent quadratic yields a rational threshold") {
  // On the hyperbolic plane with the positive cone, offset -L/2 + e with
  // q(B + sL) a perfect square: choose L = (1,1), B = (-1,-1) -> (s-1)^2 * 2.
  NSLattice lat({"e1", "e2"}, IntMatrix(int_rows({{0, 1}, {1, 0}})));
  const auto s = make_surface("h", lat, QuadraticCone{div_class({1, 1})}, div_class({0, 0}), div_class({1, 1}));
  const auto r = solve(make_problem(s, s.polarization, div_class({-1, -1})));
  CHECK(r.t == QuadNum(1));
  CHECK(r.discriminant == 0);
}

TEST_CASE("bracket oracle on presets") {
  const auto pa = minus_problem(abelian_cover());
  const QuadNum ta = solve(pa).t;
  for (long n : {1000L, 1000000L}) {
    const auto cell = bracket_oracle(pa, n);
    CHECK(cell.hi - cell.lo == Rat(Integer(1), Integer(n)));
    CHECK(in_cell(ta, cell));
  }
  const auto cell = bracket_oracle(pa, 1000000);
  CHECK(cell.lo == Rat(Integer(695194), Integer(1000000)));

  const auto pb = minus_problem(p1xe(1));
  const auto cb = bracket_oracle(pb, 1000000);
  CHECK(in_cell(QuadNum(), cb));
  CHECK(cb.hi == Rat(0));

  const auto s = abelian_cover();
  CHECK(in_cell(QuadNum(), bracket_oracle(make_problem(s, s.polarization, DivClass(3)), 1000)));
  CHECK(error_code([&] { bracket_oracle(pa, 0); }) == Errc::InvalidArgument);
}

TEST_CASE("bracket oracle agrees with the solver on random problems") {
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_problem(rng, i % 2 == 0);
    const QuadNum t = solve(p).t;
    CHECK(in_cell(t, bracket_oracle(p, 1000)));
    CHECK(in_cell(t, bracket_oracle(p, 1000000)));
  }
}

TEST_CASE("offset shift and direction scaling are exact") {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_problem(rng, i % 2 == 0);
    const QuadNum t = solve(p).t;
    const Rat c = rng.rational(5, 7);
    const auto shifted = make_problem(p.surf, p.direction, p.offset + c * p.direction);
    CHECK(solve(shifted).t == t - QuadNum(c));
    const Rat lambda(rng.integer(1, 9));
    const auto scaled = make_problem(p.surf, lambda * p.direction, p.offset);
    CHECK(solve(scaled).t == t / QuadNum(lambda));
  }
}

TEST_CASE("polyhedral thresholds are rational and feasibility flips at t") {
  Rng rng(47);
  const QuadNum eps(Rat(Integer(1), Integer(1000000)));
  for (int i = 0; i < 60; ++i) {
    const auto p = random_problem(rng, false);
    const auto r = solve(p);
    CHECK(r.discriminant == 0);
    CHECK(r.t.is_rational());
    CHECK(feasible_at(p, r.t));
    CHECK_FALSE(feasible_at(p, r.t - eps));
    CHECK(feasible_at(p, r.t + eps));
  }
  for (const auto& p : {minus_problem(abelian_cover()), plus_problem(abelian_cover()), minus_problem(p1xe(1)),
                        plus_problem(p1xe(1))}) {
    const QuadNum t = solve(p).t;
    CHECK_FALSE(feasible_at(p, t - eps));
    CHECK(feasible_at(p, t + eps));
  }
}

TEST_CASE("thresholds of K and -K pencils sum to a non-negative number") {
  const auto a = abelian_cover();
  const QuadNum sum = solve(minus_problem(a)).t + solve(plus_problem(a)).t;
  CHECK(sum == QuadNum(Rat(), Rat(Integer(2), Integer(16)), k17));
  CHECK(solve(minus_problem(p1xe(1))).t + solve(plus_problem(p1xe(1))).t == QuadNum(1));

  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const auto s = i % 2 ? random_quadratic_surface(rng) : random_polyhedral_surface(rng);
    CHECK((solve(minus_problem(s)).t + solve(plus_problem(s)).t).sign() >= 0);
  }
}
