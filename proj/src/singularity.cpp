#include "conesing/singularity.hpp"

#include "conesing/error.hpp"

namespace conesing {

namespace {

ThresholdResult pencil_threshold(const ConeSingularity& c, const DivClass& offset, const char* which) {
  try {
    return solve(make_problem(c.surf, c.surf.polarization, offset));
  } catch (const Error& e) {
    if (e.code() == Errc::Infeasible) {
      throw Error(Errc::NoBoundaryExists,
                  std::string("no boundary of the form sL ") + which + " exists: " + e.what());
    }
    throw;
  }
}

}  // namespace

ConeSingularity make_cone(SurfaceDatum surf, std::string label) {
  validate(surf);
  return ConeSingularity{std::move(surf), std::move(label)};
}

ThresholdResult minus_threshold(const ConeSingularity& c) {
  return pencil_threshold(c, -c.surf.canonical_class, "- K");
}

ThresholdResult plus_threshold(const ConeSingularity& c) {
  return pencil_threshold(c, c.surf.canonical_class, "+ K");
}

QuadNum val_relative_canonical_minus(const ConeSingularity& c) {
  return -(QuadNum(1) + minus_threshold(c).t);
}

QuadNum val_relative_canonical_plus(const ConeSingularity& c) {
  return plus_threshold(c).t - QuadNum(1);
}

LimitingValuation limiting_valuation(const QuadNum& t_minus, long m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "limiting order m must be >= 1");
  const Integer up = (QuadNum(m) * t_minus).ceil();
  LimitingValuation out;
  out.m = m;
  out.t_m = Rat(up, Integer(m));
  out.val_m = -(Rat(1) + out.t_m);
  return out;
}

LimitingValuation limiting_valuation(const ConeSingularity& c, long m) {
  return limiting_valuation(minus_threshold(c).t, m);
}

Classification classify(const QuadNum& t_minus, const QuadNum& t_plus) {
  Classification out;
  out.is_klt = t_minus.sign() < 0;
  const int canon = (t_plus - QuadNum(1)).sign();
  out.is_canonical = canon >= 0;
  out.is_terminal = canon > 0;
  return out;
}

Classification classify(const ConeSingularity& c) {
  return classify(minus_threshold(c).t, plus_threshold(c).t);
}

Integer multiplier_ideal_order(const QuadNum& val_minus, const QuadNum& k) {
  if (k.sign() <= 0) throw Error(Errc::InvalidArgument, "multiplier ideal coefficient must be positive");
  Integer order = -(val_minus - k).ceil();
  return order > 0 ? order : Integer(0);
}

Integer multiplier_ideal_order(const ConeSingularity& c, const QuadNum& k) {
  return multiplier_ideal_order(val_relative_canonical_minus(c), k);
}

JumpingNumbers jumping_numbers(const QuadNum& val_minus, std::size_t count) {
  if (count < 1) throw Error(Errc::InvalidArgument, "jumping number count must be >= 1");
  JumpingNumbers out;
  out.irrational = !val_minus.is_rational();
  // Smallest integer j with j + val- > 0.
  Integer j = (-val_minus).floor() + 1;
  out.values.reserve(count);
  for (std::size_t i = 0; i < count; ++i, ++j) out.values.push_back(QuadNum(Rat(j)) + val_minus);
  return out;
}

JumpingNumbers jumping_numbers(const ConeSingularity& c, std::size_t count) {
  return jumping_numbers(val_relative_canonical_minus(c), count);
}

bool no_accumulation_check(std::span<const QuadNum> jumps) {
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (jumps[i].sign() <= 0) return false;
    if (i > 0 && jumps[i] - jumps[i - 1] != QuadNum(1)) return false;
  }
  if (jumps.empty()) return true;
  const Integer top = jumps.back().ceil();
  for (Integer t = 1; t <= top; ++t) {
    std::size_t inside = 0;
    for (const auto& x : jumps) inside += x <= QuadNum(Rat(t)) ? 1 : 0;
    if (Integer(static_cast<unsigned long>(inside)) > t + 1) return false;
  }
  return true;
}

SingularityReport analyze(const ConeSingularity& c, std::size_t jump_count, const std::vector<long>& orders) {
  SingularityReport r;
  r.label = c.label;
  r.t_minus = minus_threshold(c);
  r.t_plus = plus_threshold(c);
  r.val_minus = -(QuadNum(1) + r.t_minus.t);
  r.val_plus = r.t_plus.t - QuadNum(1);
  r.val_minus_rational = r.val_minus.is_rational();
  r.classification = classify(r.t_minus.t, r.t_plus.t);
  r.jumping = jumping_numbers(r.val_minus, jump_count);
  for (long m : orders) r.limiting_table.push_back(limiting_valuation(r.t_minus.t, m));

  if ((r.t_minus.t + r.t_plus.t).sign() < 0) {
    throw Error(Errc::Internal, "t+ + t- < 0: the cone is not closed under addition for this input");
  }
  if (r.classification.is_klt && !r.val_minus_rational) {
    throw Error(Errc::Internal, "klt verdict with irrational valuation " + r.val_minus.exact_str() +
                                    "; the surface data cannot come from a klt cone");
  }
  return r;
}

}  // namespace conesing
