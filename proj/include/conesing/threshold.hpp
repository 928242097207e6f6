#pragma once

// One-parameter pseudoeffective threshold: inf{s : s*D + B in the closed cone}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conesing/exactnum.hpp"
#include "conesing/surface.hpp"

namespace conesing {

struct ThresholdProblem {
  SurfaceDatum surf;
  DivClass direction;
  DivClass offset;
};

/// Validates that the direction is strictly interior; throws InvalidArgument.
ThresholdProblem make_problem(SurfaceDatum surf, DivClass direction, DivClass offset);

enum class ConstraintKind { Linear, Selector, Quadratic };

/// c0 + c1 s + c2 s^2 >= 0 along the pencil.
struct PencilConstraint {
  ConstraintKind kind = ConstraintKind::Linear;
  std::size_t index = 0;  // inequality index for Linear
  Rat c0, c1, c2;

  std::string label() const;
};

struct ThresholdResult {
  QuadNum t;
  bool attained = true;
  /// Constraint whose boundary pins t; nullopt when no constraint is active.
  std::optional<PencilConstraint> active;
  Integer discriminant = 0;
  std::vector<PencilConstraint> constraints;

  std::string active_label() const { return active ? active->label() : "none"; }
};

/// The constraint polynomials of the pencil, linear ones first.
std::vector<PencilConstraint> pencil_constraints(const ThresholdProblem& p);

ThresholdResult solve(const ThresholdProblem& p);

bool feasible_at(const ThresholdProblem& p, const QuadNum& s);

struct RatInterval {
  Rat lo, hi;
};

/// Brute-force scan of the grid {j/N} over [-M, M]; returns the first cell
/// [j/N, (j+1)/N] where feasibility flips from false to true.
RatInterval bracket_oracle(const ThresholdProblem& p, long resolution);

/// The oracle's scan half-width M (integer, >= 1).
Integer oracle_bound(const ThresholdProblem& p);

}  // namespace conesing
