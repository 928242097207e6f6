#include "conesing/exactnum.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "conesing/error.hpp"

namespace conesing {

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw Error(Errc::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw Error(Errc::InvalidArgument, "malformed rational '" + std::string(text) + "'");
      }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator '" + std::string(text) + "'");
  return Rat(parse_int(text.substr(0, slash)), den);
}

Integer Rat::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rat::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rat::str() const { return value_.get_str(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

SquarefreeParts squarefree_decompose(const Integer& n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "squarefree_decompose needs n >= 1");
  Integer rest = n;
  Integer square = 1;
  Integer free = 1;
  auto strip = [&](const Integer& p) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2 == 1) free *= p;
  };
  strip(Integer(2));
  for (Integer p = 3; p * p * p <= rest; p += 2) strip(p);
  // rest now has at most two prime factors, both above the cube root.
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      square *= r;
    } else {
      free *= rest;
    }
  }
  return {Integer(square * square), square, free};
}

QuadNum::QuadNum(Rat a, Rat b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) throw Error(Errc::InvalidArgument, "negative discriminant");
  canonicalize();
}

void QuadNum::canonicalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = Rat();
  }
  if (b_.is_zero() || d_ == 0) {
    b_ = Rat();
    d_ = 0;
  }
}

QuadNum QuadNum::sqrt(const Rat& r) {
  if (r.sign() < 0) throw Error(Errc::InvalidArgument, "square root of a negative rational");
  if (r.is_zero()) return QuadNum();
  // sqrt(p/q) = sqrt(p q) / q, and p q = m^2 d.
  const auto parts = squarefree_decompose(r.num() * r.den());
  if (parts.squarefree == 1) return QuadNum(Rat(parts.root, r.den()));
  return QuadNum(Rat(), Rat(parts.root, r.den()), parts.squarefree);
}

const Rat& QuadNum::rational() const {
  if (!is_rational()) throw Error(Errc::MixedFields, "expected a rational value, got " + exact_str());
  return a_;
}

Integer common_field(const QuadNum& x, const QuadNum& y) {
  if (x.d() == 0) return y.d();
  if (y.d() == 0 || x.d() == y.d()) return x.d();
  throw Error(Errc::MixedFields, "operands live in Q(sqrt(" + x.d().get_str() + ")) and Q(sqrt(" +
                                     y.d().get_str() + "))");
}

int QuadNum::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a^2 == b^2 d is impossible for square-free d > 1 and b != 0.
  return a_ * a_ > b_ * b_ * Rat(d_) ? sa : sb;
}

Integer QuadNum::floor() const {
  if (is_rational()) return a_.floor();
  // |b| sqrt(d) = sqrt(r) with r = b^2 d, and floor(sqrt(r)) = isqrt(floor(r)).
  const Rat r = b_ * b_ * Rat(d_);
  Integer k;
  mpz_sqrt(k.get_mpz_t(), r.floor().get_mpz_t());
  const Rat lower = b_.sign() > 0 ? Rat(k) : -Rat(Integer(k + 1));
  Integer n = (a_ + lower).floor() - 1;
  while ((*this - QuadNum(Rat(Integer(n + 1)))).sign() >= 0) ++n;
  return n;
}

Integer QuadNum::ceil() const {
  Integer f = (-*this).floor();
  return -f;
}

double QuadNum::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

std::string QuadNum::decimal(int digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Integer n = (*this * QuadNum(Rat(scale)) + QuadNum(Rat(1, 2))).floor();
  Integer mag = n < 0 ? Integer(-n) : n;
  const Integer whole = mag / scale;
  std::string frac = Integer(mag % scale).get_str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = n < 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + frac;
  return out;
}

std::string QuadNum::exact_str() const {
  if (is_rational()) return "(" + a_.str() + ")";
  return "(" + a_.str() + " + " + b_.str() + "·√" + d_.get_str() + ")";
}

std::string QuadNum::display() const { return exact_str() + " ≈ " + decimal(); }

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  d_ = common_field(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  canonicalize();
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
  d_ = common_field(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  canonicalize();
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  const Integer d = common_field(*this, o);
  const Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
  const Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  canonicalize();
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
  common_field(*this, o);
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  // x / y = x * conj(y) / N(y); N(y) != 0 for y != 0 since d is not a square.
  const Rat n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const QuadNum& q) { return os << q.exact_str(); }

nlohmann::ordered_json to_json(const QuadNum& q) {
  if (!q.d().fits_slong_p()) throw Error(Errc::Internal, "discriminant too large to serialize");
  nlohmann::ordered_json j;
  j["a"] = q.a().str();
  j["b"] = q.b().str();
  j["d"] = q.d().get_si();
  return j;
}

QuadNum quadnum_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d")) {
    throw Error(Errc::Config, "QuadNum must be an object with keys a, b, d");
  }
  const auto d = j.at("d").get<std::int64_t>();
  if (d < 0) throw Error(Errc::Config, "QuadNum d must be non-negative");
  const Integer dd(static_cast<long>(d));
  if (dd > 1 && squarefree_decompose(dd).squarefree != dd) {
    throw Error(Errc::Config, "QuadNum d must be square-free");
  }
  return QuadNum(Rat::parse(j.at("a").get<std::string>()), Rat::parse(j.at("b").get<std::string>()), dd);
}

}  // namespace conesing
