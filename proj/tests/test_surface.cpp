#include <doctest.h>

#include "conesing/surface.hpp"
#include "support/errors.hpp"
#include "support/oracle.hpp"

using namespace conesing;
using namespace conesing::testing;

namespace {

SurfaceDatum abelian_base() {
  return make_surface("abelian", abelian_lattice(), QuadraticCone{div_class({1, 1, 1})}, div_class({0, 0, 0}),
                      div_class({3, 6, 6}));
}

SurfaceDatum quadrant(std::initializer_list<long> k, std::initializer_list<long> ell) {
  NSLattice lat({"e1", "e2"}, IntMatrix(int_rows({{0, 1}, {1, 0}})));
  return make_surface("quadrant", lat, PolyhedralCone{int_rows({{1, 0}, {0, 1}})}, div_class(k), div_class(ell));
}

}  // namespace

TEST_CASE("pairings on the abelian lattice") {
  const auto lat = abelian_lattice();
  CHECK(pairing(lat, div_class({1, 0, 0}), div_class({0, 1, 0})) == Rat(1));
  CHECK(pairing(lat, div_class({1, 0, 0}), div_class({1, 0, 0})) == Rat(0));
  CHECK(pairing(lat, div_class({0, 0, 1}), div_class({0, 0, 1})) == Rat(0));

  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Rat x = rng.rational(9, 5), y = rng.rational(9, 5), z = rng.rational(9, 5);
    const DivClass a(std::vector<Rat>{x, y, z});
    CHECK(pairing(lat, a, a) == Rat(2) * (x * y + x * z + y * z));
  }
}

TEST_CASE("pairing is symmetric and bilinear against the raw form") {
  const auto form = int_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const auto lat = abelian_lattice();
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    std::vector<long> x(3), y(3);
    for (auto& v : x) v = rng.integer(-20, 20);
    for (auto& v : y) v = rng.integer(-20, 20);
    CHECK(pairing(lat, from_longs(x), from_longs(y)) == Rat(raw_q(form, x, y)));
    CHECK(pairing(lat, from_longs(x), from_longs(y)) == pairing(lat, from_longs(y), from_longs(x)));
  }
  CHECK(error_code([&] { pairing(lat, div_class({1, 0}), div_class({1, 0, 0})); }) == Errc::DimensionMismatch);
}

TEST_CASE("Hodge index validation") {
  CHECK_NOTHROW(NSLattice({"a", "b", "c"}, IntMatrix(int_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}))));
  CHECK_NOTHROW(NSLattice({"a", "b"}, IntMatrix(int_rows({{0, 1}, {1, 0}}))));
  CHECK_NOTHROW(NSLattice({"a"}, IntMatrix(int_rows({{4}}))));

  const auto msg = error_message([] { NSLattice({"a", "b"}, IntMatrix(int_rows({{1, 0}, {0, 1}}))); });
  CHECK(msg.find("Hodge index") != std::string::npos);
  CHECK(msg.find("(2,0)") != std::string::npos);
  CHECK(error_code([] { NSLattice({"a", "b"}, IntMatrix(int_rows({{1, 0}, {0, 1}}))); }) == Errc::WrongSignature);
  CHECK(error_code([] { NSLattice({"a", "b"}, IntMatrix(int_rows({{1, 0}, {0, 0}}))); }) == Errc::WrongSignature);
  CHECK(error_code([] { NSLattice({"a"}, IntMatrix(int_rows({{-1}}))); }) == Errc::WrongSignature);
  CHECK(error_code([] { NSLattice({"a", "b"}, IntMatrix(int_rows({{0, 1}, {2, 0}}))); }) == Errc::WrongSignature);
  CHECK(error_code([] {
          std::vector<std::vector<Integer>> big(9, std::vector<Integer>(9, 0));
          big[0][0] = 1;
          for (int i = 1; i < 9; ++i) big[i][i] = -1;
          NSLattice(std::vector<std::string>(9, "e"), IntMatrix(big));
        }) == Errc::DimensionMismatch);
}

TEST_CASE("inertia matches known signatures including zero pivots") {
  CHECK(inertia(IntMatrix(int_rows({{0, 1}, {1, 0}}))) == Inertia{1, 1, 0});
  CHECK(inertia(IntMatrix(int_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}))) == Inertia{1, 2, 0});
  CHECK(inertia(IntMatrix(int_rows({{0, 0}, {0, 0}}))) == Inertia{0, 0, 2});
  CHECK(inertia(IntMatrix(int_rows({{1, 1}, {1, 1}}))) == Inertia{1, 0, 1});
  CHECK(inertia(IntMatrix(int_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}))) == Inertia{1, 1, 1});
  // Diagonal forms have the obvious inertia; congruence by a unimodular
  // matrix preserves it.
  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
    std::vector<long> diag(n);
    Inertia expect;
    for (auto& d : diag) {
      d = rng.integer(-3, 3);
      (d > 0 ? expect.positive : d < 0 ? expect.negative : expect.zero) += 1;
    }
    // P = unit upper triangular with random entries.
    std::vector<std::vector<long>> p(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      p[i][i] = 1;
      for (std::size_t j = i + 1; j < n; ++j) p[i][j] = rng.integer(-2, 2);
    }
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) m[i][j] += p[k][i] * diag[k] * p[k][j];
      }
    }
    CHECK(inertia(IntMatrix(m)) == expect);
  }
}

TEST_CASE("effectivity on the abelian quadratic cone") {
  const auto surf = abelian_base();
  CHECK(is_effective(surf, div_class({0, 0, 0})));
  CHECK(is_effective(surf, div_class({1, 1, 0})));
  CHECK(is_effective(surf, div_class({1, 0, 0})));  // boundary ray, cone is closed
  CHECK_FALSE(is_effective(surf, div_class({1, -1, 0})));
  CHECK_FALSE(is_effective(surf, div_class({-1, -1, -1})));  // negative nappe
  CHECK(is_interior(surf, div_class({1, 1, 1})));
  CHECK_FALSE(is_interior(surf, div_class({1, 0, 0})));

  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    std::vector<long> x(3), y(3);
    for (auto& v : x) v = rng.integer(-5, 8);
    for (auto& v : y) v = rng.integer(-5, 8);
    const bool ex = is_effective(surf, from_longs(x));
    CHECK(ex == is_effective(surf, Rat(rng.integer(1, 9)) * from_longs(x)));
    if (ex && is_effective(surf, from_longs(y))) CHECK(is_effective(surf, from_longs(x) + from_longs(y)));
    CHECK(ex == is_effective(surf, lift(from_longs(x))));
  }
}

TEST_CASE("effectivity on a polyhedral cone") {
  const auto surf = quadrant({-2, 0}, {2, 2});
  CHECK(is_effective(surf, div_class({0, 3})));
  CHECK_FALSE(is_effective(surf, div_class({-1, 3})));
  CHECK(is_interior(surf, div_class({1, 1})));
  CHECK_FALSE(is_interior(surf, div_class({0, 1})));
}

TEST_CASE("surface validation") {
  NSLattice lat({"e1", "e2"}, IntMatrix(int_rows({{0, 1}, {1, 0}})));
  CHECK(error_code([&] {
          make_surface("x", lat, PolyhedralCone{int_rows({{1, 1}})}, div_class({0, 0}), div_class({1, 1}));
        }) == Errc::InvalidCone);
  CHECK(error_code([&] {
          make_surface("x", lat, QuadraticCone{div_class({1, 0})}, div_class({0, 0}), div_class({1, 1}));
        }) == Errc::InvalidCone);
  CHECK(error_code([&] {
          make_surface("x", lat, QuadraticCone{div_class({1, 1})}, div_class({0, 0}), div_class({1, 0}));
        }) == Errc::InvalidSurface);
  CHECK(error_code([&] {
          make_surface("x", lat, QuadraticCone{div_class({1, 1})}, div_class({0, 0, 0}), div_class({1, 1}));
        }) == Errc::DimensionMismatch);
}

TEST_CASE("double cover of the abelian surface") {
  const auto base = abelian_base();
  const auto cover = double_cover(base, div_class({6, 6, 0}));
  CHECK(cover.canonical_class == div_class({3, 3, 0}));
  CHECK(cover.cover_degree == 2);
  CHECK(cover.polarization == base.polarization);
  CHECK(pairing(cover.lattice, div_class({1, 0, 0}), div_class({0, 1, 0})) == Rat(2));
  CHECK(pairing(cover.lattice, div_class({3, 6, 6}), div_class({3, 6, 6})) ==
        Rat(2) * pairing(base.lattice, div_class({3, 6, 6}), div_class({3, 6, 6})));

  CHECK(error_code([&] { double_cover(base, div_class({0, 0, 0})); }) == Errc::BranchNotAmple);
  CHECK(error_code([&] { double_cover(base, div_class({6, 5, 0})); }) == Errc::BranchNotDivisibleBy2);
  CHECK(error_code([&] { double_cover(base, div_class({2, -2, 0})); }) == Errc::BranchNotAmple);
  CHECK(error_code([&] { double_cover(cover, div_class({6, 6, 0})); }) == Errc::InvalidSurface);
}
