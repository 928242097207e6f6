#pragma once

// Exact arithmetic over Q and real quadratic fields Q(sqrt(d)).
//
// Rat is a thin value wrapper over GMP rationals. QuadNum represents
// a + b*sqrt(d) with d square-free; all comparisons are decided exactly by
// sign logic on a^2 versus b^2 d, never by floating point.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

namespace conesing {

using Integer = mpz_class;

class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const Integer& value) : value_(value) {}  // NOLINT
  Rat(const Integer& num, const Integer& den);
  explicit Rat(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q" (no decimals, no whitespace).
  static Rat parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;
  Rat abs() const { return Rat(mpq_class(::abs(value_))); }
  double to_double() const { return value_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// n = square_part * squarefree, square_part = root^2.
struct SquarefreeParts {
  Integer square_part;
  Integer root;
  Integer squarefree;
};

/// n = m^2 d with d square-free. Trial division up to the cube root of the
/// unfactored cofactor, then a perfect-square test on what remains.
SquarefreeParts squarefree_decompose(const Integer& n);

/// a + b*sqrt(d) in canonical form: b == 0 iff d == 0, and d != 1.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadNum(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  /// d must be non-negative and square-free.
  QuadNum(Rat a, Rat b, Integer d);

  /// Exact square root of a non-negative rational in canonical form.
  static QuadNum sqrt(const Rat& r);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  /// Returns the rational value; throws MixedFields when irrational.
  const Rat& rational() const;

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  Integer floor() const;
  Integer ceil() const;

  QuadNum conjugate() const { return QuadNum(a_, -b_, d_); }
  /// a^2 - b^2 d
  Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

  double to_double() const;
  /// Exact round-half-up to 6 decimals, e.g. "-1.695194".
  std::string decimal(int digits = 6) const;
  /// "(p/q + p'/q'·√d)" or "(p/q)" when rational.
  std::string exact_str() const;
  /// exact_str() followed by " ≈ " and decimal().
  std::string display() const;

  QuadNum operator-() const { return QuadNum(-a_, -b_, d_); }
  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o);

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }

  /// Structural equality; canonical form makes it value equality within a field.
  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  /// Total order; throws MixedFields across distinct fields.
  friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y);

 private:
  void canonicalize();

  Rat a_;
  Rat b_;
  Integer d_ = 0;
};

/// The common field of two operands (0 if both rational); throws MixedFields.
Integer common_field(const QuadNum& x, const QuadNum& y);

std::ostream& operator<<(std::ostream& os, const QuadNum& q);

// {"a": "p/q", "b": "p/q", "d": n}
nlohmann::ordered_json to_json(const QuadNum& q);
QuadNum quadnum_from_json(const nlohmann::json& j);

}  // namespace conesing
