#include <doctest.h>

#include "conesing/error.hpp"
#include "conesing/exactnum.hpp"
#include "support/errors.hpp"
#include "support/oracle.hpp"

using namespace conesing;
using conesing::testing::error_code;
using conesing::testing::Rng;
using conesing::testing::to_mpf;

namespace {

const Integer k17(17);

QuadNum q17(long a_num, long a_den, long b_num, long b_den) {
  return QuadNum(Rat(Integer(a_num), Integer(a_den)), Rat(Integer(b_num), Integer(b_den)), k17);
}

}  // namespace

TEST_CASE("rationals stay reduced with positive denominator") {
  const Rat r(Integer(6), Integer(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rat::parse("10/-4") == Rat(Integer(-5), Integer(2)));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat(Integer(3), Integer(4)).str() == "3/4");
  CHECK(Rat(-2).str() == "-2");
  CHECK(error_code([] { Rat::parse("0.75"); }) == Errc::InvalidArgument);
  CHECK(error_code([] { Rat::parse("1/0"); }) == Errc::DivisionByZero);
  CHECK(error_code([] { Rat::parse(""); }) == Errc::InvalidArgument);
  CHECK(Rat(Integer(-7), Integer(2)).floor() == -4);
  CHECK(Rat(Integer(-7), Integer(2)).ceil() == -3);
}

TEST_CASE("squarefree decomposition") {
  auto p68 = squarefree_decompose(Integer(68));
  CHECK(p68.square_part == 4);
  CHECK(p68.root == 2);
  CHECK(p68.squarefree == 17);
  auto p1 = squarefree_decompose(Integer(1));
  CHECK(p1.square_part == 1);
  CHECK(p1.squarefree == 1);
  auto p17 = squarefree_decompose(Integer(17));
  CHECK(p17.square_part == 1);
  CHECK(p17.squarefree == 17);
  // Two large primes above the cube root, squared and unsquared.
  const Integer big = Integer(1000003) * Integer(1000003) * 12;
  auto pb = squarefree_decompose(big);
  CHECK(pb.squarefree == 3);
  CHECK(pb.root == Integer(1000003) * 2);
  auto pc = squarefree_decompose(Integer(1000003) * Integer(999983));
  CHECK(pc.squarefree == Integer(1000003) * Integer(999983));
  CHECK(error_code([] { squarefree_decompose(Integer(0)); }) == Errc::InvalidArgument);

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Integer n(rng.integer(1, 200000));
    const auto p = squarefree_decompose(n);
    CHECK(p.square_part * p.squarefree == n);
    CHECK(p.root * p.root == p.square_part);
    for (long f = 2; f * f <= p.squarefree; ++f) CHECK(p.squarefree % (f * f) != 0);
  }
}

TEST_CASE("quadratic field arithmetic examples") {
  const QuadNum one_plus(Rat(1), Rat(1), k17);
  const QuadNum one_minus(Rat(1), Rat(-1), k17);
  CHECK(one_plus * one_minus == QuadNum(-16));
  CHECK((one_plus * one_minus).is_rational());

  const QuadNum x = q17(3, 5, -2, 7);
  CHECK(x + QuadNum() == x);

  // ((7 + sqrt17)/16) * 16 - 7 = sqrt17, cross-checked at 30 digits.
  const QuadNum root = q17(7, 16, 1, 16);
  const QuadNum got = root * QuadNum(16) - QuadNum(7);
  CHECK(got == QuadNum(Rat(), Rat(1), k17));
  mpf_class expect(17, 512);
  expect = sqrt(expect);
  CHECK(conesing::testing::abs_distance(to_mpf(got), expect) < 1e-30);

  CHECK(QuadNum::sqrt(Rat(68)) == QuadNum(Rat(), Rat(2), k17));
  CHECK(QuadNum::sqrt(Rat(Integer(9), Integer(4))) == QuadNum(Rat(Integer(3), Integer(2))));
  CHECK(QuadNum::sqrt(Rat(Integer(17), Integer(4))) == q17(0, 1, 1, 2));
  // d = 1 folds into the rational part.
  CHECK(QuadNum(Rat(2), Rat(3), Integer(1)) == QuadNum(5));
  CHECK(QuadNum(Rat(2), Rat(0), k17).d() == 0);
}

TEST_CASE("mixed fields and division by zero are rejected") {
  const QuadNum a(Rat(1), Rat(1), Integer(2));
  const QuadNum b(Rat(1), Rat(1), Integer(3));
  CHECK(error_code([&] { return a + b; }) == Errc::MixedFields);
  CHECK(error_code([&] { return a * b; }) == Errc::MixedFields);
  CHECK(error_code([&] { return a < b; }) == Errc::MixedFields);
  CHECK(error_code([&] { return a / QuadNum(); }) == Errc::DivisionByZero);
  CHECK((a + QuadNum(3)).d() == 2);  // rational operands coerce
}

TEST_CASE("sign examples") {
  CHECK(QuadNum().sign() == 0);
  CHECK(QuadNum(Rat(7), Rat(-2), k17).sign() == -1);
  const QuadNum diff = q17(7, 16, 1, 16) - QuadNum(Rat(Integer(2), Integer(5)));
  CHECK(diff.sign() == 1);
  CHECK(sgn(to_mpf(diff)) == 1);
}

TEST_CASE("floor and ceil examples") {
  const QuadNum val = q17(-23, 16, -1, 16);
  CHECK(val.floor() == -2);
  CHECK(conesing::testing::mpf_floor(to_mpf(val)) == -2);
  CHECK(QuadNum(3).ceil() == 3);
  CHECK(QuadNum(3).floor() == 3);
  CHECK(q17(7, 16, 1, 16).floor() == 0);
  CHECK(q17(7, 16, 1, 16).ceil() == 1);
  // 16 t = 7 + sqrt17 ~ 11.12
  CHECK(q17(7, 1, 1, 1).ceil() == 12);
}

TEST_CASE("decimal and exact rendering") {
  const QuadNum val = q17(-23, 16, -1, 16);
  CHECK(val.exact_str() == "(-23/16 + -1/16·√17)");
  CHECK(val.decimal() == "-1.695194");
  CHECK(val.display() == "(-23/16 + -1/16·√17) ≈ -1.695194");
  CHECK(QuadNum(Rat(Integer(-7), Integer(4))).display() == "(-7/4) ≈ -1.750000");
  CHECK(QuadNum(Rat(Integer(-1), Integer(3000000))).decimal() == "0.000000");
  CHECK(QuadNum(Rat(Integer(1), Integer(2000000))).decimal() == "0.000001");
}

TEST_CASE("json encoding round trips") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const QuadNum x = rng.quad(17);
    CHECK(quadnum_from_json(nlohmann::json::parse(to_json(x).dump())) == x);
  }
  const auto j = to_json(q17(-23, 16, -1, 16));
  CHECK(j.dump() == R"({"a":"-23/16","b":"-1/16","d":17})");
  CHECK(error_code([] { quadnum_from_json(nlohmann::json::parse(R"({"a":"1","b":"1","d":8})")); }) ==
        Errc::Config);
}

TEST_CASE("field axioms hold exactly on random samples of Q(sqrt17)") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const QuadNum x = rng.quad(17), y = rng.quad(17), z = rng.quad(17);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    if (!x.is_zero()) CHECK(x * (QuadNum(1) / x) == QuadNum(1));
    CHECK((x * x.conjugate()).is_rational());
    CHECK(x * x.conjugate() == QuadNum(x.norm()));
  }
}

TEST_CASE("sign is a total order consistent with high-precision evaluation") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const QuadNum x = rng.quad(17), y = rng.quad(17), z = rng.quad(17);
    const int n = (x < y) + (x == y) + (x > y);
    CHECK(n == 1);
    if (x <= y && y <= z) CHECK(x <= z);

    const mpf_class fx = to_mpf(x, 200);  // ~60 digits
    if (std::abs(fx.get_d()) > 1e-30) CHECK(x.sign() == sgn(fx));

    const Integer f = x.floor();
    CHECK((x - QuadNum(Rat(f))).sign() >= 0);
    CHECK((x - QuadNum(Rat(Integer(f + 1)))).sign() < 0);
    CHECK(x.ceil() == -((-x).floor()));
    CHECK(f == conesing::testing::mpf_floor(to_mpf(x)));
  }
  // Near-cancellation: a^2 and b^2 d differ by one.
  const QuadNum tight(Rat(Integer(4)), Rat(-1), k17);  // 4 - sqrt17 ~ -0.123
  CHECK(tight.sign() == -1);
  const QuadNum pell(Rat(33), Rat(-8), k17);  // 33^2 - 64*17 = 1
  CHECK(pell.sign() == 1);
  CHECK(pell.floor() == 0);
}
