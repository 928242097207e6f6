#pragma once

// Invariants of the cone singularity over a polarized surface (S, L), read
// off along the negative section S0 of the vertex blow-up:
//
//   t-  = inf{s : sL - K effective},  val(K-)  = -(1 + t-)
//   t+  = inf{r : rL + K effective},  val(K)   = t+ - 1
//
// klt iff t- < 0, canonical iff t+ >= 1, terminal iff t+ > 1.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "conesing/exactnum.hpp"
#include "conesing/surface.hpp"
#include "conesing/threshold.hpp"

namespace conesing {

struct ConeSingularity {
  SurfaceDatum surf;
  std::string label;
};

ConeSingularity make_cone(SurfaceDatum surf, std::string label);

/// solve(L, -K); Infeasible becomes NoBoundaryExists.
ThresholdResult minus_threshold(const ConeSingularity& c);
/// solve(L, +K); Infeasible becomes NoBoundaryExists.
ThresholdResult plus_threshold(const ConeSingularity& c);

QuadNum val_relative_canonical_minus(const ConeSingularity& c);
QuadNum val_relative_canonical_plus(const ConeSingularity& c);

struct LimitingValuation {
  long m = 1;
  Rat t_m;
  Rat val_m;
};

/// t_m = ceil(m t-)/m, val_m = -(1 + t_m).
LimitingValuation limiting_valuation(const QuadNum& t_minus, long m);
LimitingValuation limiting_valuation(const ConeSingularity& c, long m);

struct Classification {
  bool is_klt = false;
  bool is_canonical = false;
  bool is_terminal = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const QuadNum& t_minus, const QuadNum& t_plus);
Classification classify(const ConeSingularity& c);

/// Vanishing order along S0 of the multiplier ideal of (C, k*P):
/// max(0, -ceil(val- - k)). Requires k > 0.
Integer multiplier_ideal_order(const QuadNum& val_minus, const QuadNum& k);
Integer multiplier_ideal_order(const ConeSingularity& c, const QuadNum& k);

struct JumpingNumbers {
  std::vector<QuadNum> values;
  bool irrational = false;
};

/// First `count` positive members of {j + val- : j integer}.
JumpingNumbers jumping_numbers(const QuadNum& val_minus, std::size_t count);
JumpingNumbers jumping_numbers(const ConeSingularity& c, std::size_t count);

/// Positive, strictly increasing with unit gaps, and at most ceil(T)+1
/// entries in every [0, T].
bool no_accumulation_check(std::span<const QuadNum> jumps);

struct SingularityReport {
  std::string label;
  ThresholdResult t_minus;
  ThresholdResult t_plus;
  QuadNum val_minus;
  QuadNum val_plus;
  bool val_minus_rational = true;
  Classification classification;
  JumpingNumbers jumping;
  std::vector<LimitingValuation> limiting_table;
};

inline const std::vector<long> kDefaultLimitingOrders = {1, 2, 4, 8, 16, 32};

/// Full analysis. Throws Internal if a klt verdict comes with an irrational
/// valuation (klt cones have rational valuations).
SingularityReport analyze(const ConeSingularity& c, std::size_t jump_count = 10,
                          const std::vector<long>& orders = kDefaultLimitingOrders);

}  // namespace conesing
