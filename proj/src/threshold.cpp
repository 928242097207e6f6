#include "conesing/threshold.hpp"

#include <algorithm>
#include <utility>

#include "conesing/error.hpp"

namespace conesing {

namespace {

// Closed interval with optional infinite ends; lo_owner is the constraint
// whose boundary produced the finite left end.
struct Piece {
  std::optional<QuadNum> lo;
  std::optional<QuadNum> hi;
  std::optional<std::size_t> lo_owner;
};

using PieceSet = std::vector<Piece>;

PieceSet whole_line() { return {Piece{}}; }

PieceSet constraint_pieces(const PencilConstraint& c, std::size_t owner) {
  if (c.kind != ConstraintKind::Quadratic) {
    const int slope = c.c1.sign();
    if (slope == 0) return c.c0.sign() >= 0 ? whole_line() : PieceSet{};
    const QuadNum root(-c.c0 / c.c1);
    if (slope > 0) return {Piece{root, std::nullopt, owner}};
    return {Piece{std::nullopt, root, std::nullopt}};
  }
  // Leading coefficient is positive: solution set is (-inf, r1] U [r2, inf).
  const Rat disc = c.c1 * c.c1 - Rat(4) * c.c2 * c.c0;
  if (disc.sign() <= 0) return whole_line();
  const QuadNum root_disc = QuadNum::sqrt(disc);
  const QuadNum denom(Rat(2) * c.c2);
  const QuadNum r1 = (QuadNum(-c.c1) - root_disc) / denom;
  const QuadNum r2 = (QuadNum(-c.c1) + root_disc) / denom;
  return {Piece{std::nullopt, r1, std::nullopt}, Piece{r2, std::nullopt, owner}};
}

PieceSet intersect(const PieceSet& a, const PieceSet& b) {
  PieceSet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Piece p;
      if (!x.lo) {
        p.lo = y.lo;
        p.lo_owner = y.lo_owner;
      } else if (!y.lo || *x.lo >= *y.lo) {
        p.lo = x.lo;
        p.lo_owner = x.lo_owner;
      } else {
        p.lo = y.lo;
        p.lo_owner = y.lo_owner;
      }
      if (!x.hi) {
        p.hi = y.hi;
      } else if (!y.hi || *x.hi <= *y.hi) {
        p.hi = x.hi;
      } else {
        p.hi = y.hi;
      }
      if (p.lo && p.hi && *p.lo > *p.hi) continue;
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

std::string PencilConstraint::label() const {
  switch (kind) {
    case ConstraintKind::Linear: return "linear[" + std::to_string(index) + "]";
    case ConstraintKind::Selector: return "selector";
    case ConstraintKind::Quadratic: return "quadratic";
  }
  return "unknown";
}

ThresholdProblem make_problem(SurfaceDatum surf, DivClass direction, DivClass offset) {
  validate(surf);
  if (direction.rank() != surf.lattice.rank() || offset.rank() != surf.lattice.rank()) {
    throw Error(Errc::DimensionMismatch, "pencil classes do not match the lattice rank");
  }
  if (!is_interior(surf, direction)) {
    throw Error(Errc::InvalidArgument, "pencil direction " + to_string(direction) + " is not strictly inside the cone");
  }
  return ThresholdProblem{std::move(surf), std::move(direction), std::move(offset)};
}

std::vector<PencilConstraint> pencil_constraints(const ThresholdProblem& p) {
  const auto& lat = p.surf.lattice;
  const auto& d = p.direction;
  const auto& b = p.offset;
  std::vector<PencilConstraint> out;
  if (const auto* q = std::get_if<QuadraticCone>(&p.surf.cone)) {
    const auto& h = q->ample_selector;
    out.push_back({ConstraintKind::Selector, 0, pairing(lat, b, h), pairing(lat, d, h), Rat()});
    out.push_back({ConstraintKind::Quadratic, 0, pairing(lat, b, b), Rat(2) * pairing(lat, d, b), pairing(lat, d, d)});
  } else {
    const auto& ineq = std::get<PolyhedralCone>(p.surf.cone).inequalities;
    for (std::size_t i = 0; i < ineq.size(); ++i) {
      Rat at_d, at_b;
      for (std::size_t k = 0; k < ineq[i].size(); ++k) {
        at_d += Rat(ineq[i][k]) * d[k];
        at_b += Rat(ineq[i][k]) * b[k];
      }
      out.push_back({ConstraintKind::Linear, i, at_b, at_d, Rat()});
    }
  }
  return out;
}

ThresholdResult solve(const ThresholdProblem& p) {
  ThresholdResult result;
  result.constraints = pencil_constraints(p);
  for (const auto& c : result.constraints) {
    if (c.kind == ConstraintKind::Quadratic && c.c2.sign() <= 0) {
      throw Error(Errc::Internal, "pencil direction has non-positive square");
    }
  }

  PieceSet feasible = whole_line();
  for (std::size_t i = 0; i < result.constraints.size(); ++i) {
    feasible = intersect(feasible, constraint_pieces(result.constraints[i], i));
  }
  if (feasible.empty()) throw Error(Errc::Infeasible, "no parameter puts the pencil inside the cone");

  const Piece* first = &feasible.front();
  for (const auto& piece : feasible) {
    if (!piece.lo) throw Error(Errc::NotBoundedBelow, "feasible set is unbounded below");
    if (*piece.lo < *first->lo) first = &piece;
  }
  result.t = *first->lo;
  result.attained = true;
  if (first->lo_owner) result.active = result.constraints[*first->lo_owner];
  result.discriminant = result.t.d();

  if (!feasible_at(p, result.t)) throw Error(Errc::Internal, "solved threshold fails the membership test");
  return result;
}

bool feasible_at(const ThresholdProblem& p, const QuadNum& s) {
  return is_effective(p.surf, pencil_point(s, p.direction, p.offset));
}

}  // namespace conesing
