#pragma once

// Numerical model of a polarized surface: Neron-Severi lattice with its
// intersection form, a closed effective-cone model, the canonical class and
// the polarization. Only numerical classes are modelled.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "conesing/exactnum.hpp"

namespace conesing {

inline constexpr std::size_t kMaxPicardRank = 8;

/// Coordinates of a numerical class in the lattice basis.
template <class Scalar>
class BasicDivClass {
 public:
  BasicDivClass() = default;
  explicit BasicDivClass(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  explicit BasicDivClass(std::size_t rank) : coords_(rank) {}

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }

  friend bool operator==(const BasicDivClass&, const BasicDivClass&) = default;

 private:
  std::vector<Scalar> coords_;
};

using DivClass = BasicDivClass<Rat>;
using QuadDivClass = BasicDivClass<QuadNum>;

DivClass operator+(const DivClass& x, const DivClass& y);
DivClass operator-(const DivClass& x, const DivClass& y);
DivClass operator*(const Rat& k, const DivClass& x);
DivClass operator-(const DivClass& x);
QuadDivClass lift(const DivClass& x);
/// s*direction + offset, the pencil point at parameter s.
QuadDivClass pencil_point(const QuadNum& s, const DivClass& direction, const DivClass& offset);

std::string to_string(const DivClass& x);

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::vector<std::vector<Integer>> rows);

  std::size_t size() const { return n_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  bool is_symmetric() const;
  IntMatrix scaled(long k) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia of a symmetric form by rational congruence diagonalization.
Inertia inertia(const IntMatrix& form);

/// Throws WrongSignature unless the form has signature (1, rank-1).
void validate_hodge_index(const IntMatrix& form);

class NSLattice {
 public:
  NSLattice() = default;
  /// Validates symmetry, rank cap and the Hodge index signature.
  NSLattice(std::vector<std::string> basis_labels, IntMatrix form);

  std::size_t rank() const { return form_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const IntMatrix& form() const { return form_; }

 private:
  std::vector<std::string> labels_;
  IntMatrix form_;
};

Rat pairing(const NSLattice& lat, const DivClass& x, const DivClass& y);
QuadNum pairing(const NSLattice& lat, const QuadDivClass& x, const QuadDivClass& y);

/// Positive cone {q(a,a) >= 0, q(a,h) >= 0}, h selecting the nappe.
struct QuadraticCone {
  DivClass ample_selector;
};

/// {a : l_i . a >= 0 for all i}; functionals act on coordinates directly.
struct PolyhedralCone {
  std::vector<std::vector<Integer>> inequalities;
};

using ConeModel = std::variant<QuadraticCone, PolyhedralCone>;

struct SurfaceDatum {
  std::string name;
  NSLattice lattice;
  ConeModel cone;
  DivClass canonical_class;
  DivClass polarization;
  int cover_degree = 1;
};

/// Checks every SurfaceDatum invariant; throws InvalidCone / InvalidSurface /
/// DimensionMismatch.
void validate(const SurfaceDatum& surf);

/// Builds and validates.
SurfaceDatum make_surface(std::string name, NSLattice lattice, ConeModel cone, DivClass canonical,
                          DivClass polarization, int cover_degree = 1);

/// Strict interior of the closed cone.
bool is_interior(const SurfaceDatum& surf, const DivClass& x);

bool is_effective(const SurfaceDatum& surf, const QuadDivClass& x);
bool is_effective(const SurfaceDatum& surf, const DivClass& x);

/// Degree-two cover branched along branch = 2L', expressed on the pulled-back
/// sublattice: form doubled, K_W = K + L', polarization and cone unchanged.
SurfaceDatum double_cover(const SurfaceDatum& surf, const DivClass& branch);

}  // namespace conesing
