#include "conesing/surface.hpp"

#include <sstream>
#include <utility>

#include "conesing/error.hpp"

namespace conesing {

namespace {

void require_rank(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw Error(Errc::DimensionMismatch, std::string(what) + ": expected " + std::to_string(expected) +
                                             " coordinates, got " + std::to_string(got));
  }
}

template <class Scalar>
Scalar pairing_impl(const IntMatrix& form, const BasicDivClass<Scalar>& x, const BasicDivClass<Scalar>& y) {
  require_rank(form.size(), x.rank(), "pairing");
  require_rank(form.size(), y.rank(), "pairing");
  Scalar acc{};
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (x[i] == Scalar{}) continue;
    Scalar row{};
    for (std::size_t j = 0; j < form.size(); ++j) {
      if (form(i, j) != 0) row += Scalar(Rat(form(i, j))) * y[j];
    }
    acc += x[i] * row;
  }
  return acc;
}

template <class Scalar>
Scalar apply_functional(const std::vector<Integer>& l, const BasicDivClass<Scalar>& x) {
  require_rank(l.size(), x.rank(), "linear functional");
  Scalar acc{};
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] != 0) acc += Scalar(Rat(l[i])) * x[i];
  }
  return acc;
}

template <class Scalar>
bool effective_impl(const SurfaceDatum& surf, const BasicDivClass<Scalar>& x) {
  require_rank(surf.lattice.rank(), x.rank(), "class");
  if (const auto* q = std::get_if<QuadraticCone>(&surf.cone)) {
    BasicDivClass<Scalar> h(std::vector<Scalar>(q->ample_selector.coords().begin(),
                                                q->ample_selector.coords().end()));
    return pairing_impl(surf.lattice.form(), x, x).sign() >= 0 &&
           pairing_impl(surf.lattice.form(), x, h).sign() >= 0;
  }
  for (const auto& l : std::get<PolyhedralCone>(surf.cone).inequalities) {
    if (apply_functional(l, x).sign() < 0) return false;
  }
  return true;
}

// Rank of an integer matrix by exact rational elimination.
std::size_t matrix_rank(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  std::vector<std::vector<Rat>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      const Rat f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

DivClass operator+(const DivClass& x, const DivClass& y) {
  require_rank(x.rank(), y.rank(), "class sum");
  DivClass out(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) out[i] = x[i] + y[i];
  return out;
}

DivClass operator-(const DivClass& x, const DivClass& y) { return x + (-y); }

DivClass operator*(const Rat& k, const DivClass& x) {
  DivClass out(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) out[i] = k * x[i];
  return out;
}

DivClass operator-(const DivClass& x) { return Rat(-1) * x; }

QuadDivClass lift(const DivClass& x) {
  return QuadDivClass(std::vector<QuadNum>(x.coords().begin(), x.coords().end()));
}

QuadDivClass pencil_point(const QuadNum& s, const DivClass& direction, const DivClass& offset) {
  require_rank(direction.rank(), offset.rank(), "pencil");
  QuadDivClass out(direction.rank());
  for (std::size_t i = 0; i < direction.rank(); ++i) out[i] = s * QuadNum(direction[i]) + QuadNum(offset[i]);
  return out;
}

std::string to_string(const DivClass& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (i) out += ", ";
    out += x[i].str();
  }
  return out + ")";
}

IntMatrix::IntMatrix(std::vector<std::vector<Integer>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (auto& r : rows) {
    if (r.size() != n_) throw Error(Errc::DimensionMismatch, "intersection form must be square");
    for (auto& v : r) data_.push_back(std::move(v));
  }
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::scaled(long k) const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v *= k;
  return out;
}

Inertia inertia(const IntMatrix& form) {
  const std::size_t n = form.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(form(i, j));
  }
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };

  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][piv].is_zero()) ++piv;
    if (piv == n) {
      // Zero diagonal: move to e_i + e_j, whose square is 2 a_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!a[i][j].is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        out.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      piv = pi;
    }
    swap_index(piv, k);
    const Rat p = a[k][k];
    (p.sign() > 0 ? out.positive : out.negative) += 1;
    std::vector<Rat> col(n);
    for (std::size_t i = k + 1; i < n; ++i) col[i] = a[i][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      a[i][k] = a[k][i] = Rat();
      if (col[i].is_zero()) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= col[i] * col[j] / p;
    }
  }
  return out;
}

void validate_hodge_index(const IntMatrix& form) {
  const Inertia in = inertia(form);
  if (in.positive != 1 || in.zero != 0) {
    std::ostringstream os;
    os << "intersection form violates the Hodge index theorem: signature (" << in.positive << ","
       << in.negative << ")";
    if (in.zero) os << " with " << in.zero << " null direction(s)";
    os << ", expected (1," << form.size() - 1 << ")";
    throw Error(Errc::WrongSignature, os.str());
  }
}

NSLattice::NSLattice(std::vector<std::string> basis_labels, IntMatrix form)
    : labels_(std::move(basis_labels)), form_(std::move(form)) {
  if (form_.size() == 0) throw Error(Errc::DimensionMismatch, "lattice rank must be positive");
  if (form_.size() > kMaxPicardRank) {
    throw Error(Errc::DimensionMismatch, "lattice rank " + std::to_string(form_.size()) + " exceeds cap " +
                                             std::to_string(kMaxPicardRank));
  }
  require_rank(form_.size(), labels_.size(), "basis labels");
  if (!form_.is_symmetric()) throw Error(Errc::WrongSignature, "intersection form is not symmetric");
  validate_hodge_index(form_);
}

Rat pairing(const NSLattice& lat, const DivClass& x, const DivClass& y) {
  return pairing_impl(lat.form(), x, y);
}

QuadNum pairing(const NSLattice& lat, const QuadDivClass& x, const QuadDivClass& y) {
  return pairing_impl(lat.form(), x, y);
}

bool is_interior(const SurfaceDatum& surf, const DivClass& x) {
  require_rank(surf.lattice.rank(), x.rank(), "class");
  if (const auto* q = std::get_if<QuadraticCone>(&surf.cone)) {
    return pairing(surf.lattice, x, x).sign() > 0 && pairing(surf.lattice, x, q->ample_selector).sign() > 0;
  }
  for (const auto& l : std::get<PolyhedralCone>(surf.cone).inequalities) {
    if (apply_functional(l, x).sign() <= 0) return false;
  }
  return true;
}

bool is_effective(const SurfaceDatum& surf, const QuadDivClass& x) { return effective_impl(surf, x); }
bool is_effective(const SurfaceDatum& surf, const DivClass& x) { return effective_impl(surf, x); }

void validate(const SurfaceDatum& surf) {
  const std::size_t rho = surf.lattice.rank();
  if (rho == 0) throw Error(Errc::InvalidSurface, "surface has no lattice");
  if (const auto* q = std::get_if<QuadraticCone>(&surf.cone)) {
    require_rank(rho, q->ample_selector.rank(), "cone.ample");
    const Rat hh = pairing(surf.lattice, q->ample_selector, q->ample_selector);
    if (hh.sign() <= 0) {
      throw Error(Errc::InvalidCone, "ample selector has non-positive square " + hh.str());
    }
  } else {
    const auto& ineq = std::get<PolyhedralCone>(surf.cone).inequalities;
    if (ineq.empty()) throw Error(Errc::InvalidCone, "polyhedral cone needs at least one inequality");
    for (const auto& l : ineq) require_rank(rho, l.size(), "cone.inequalities");
    if (matrix_rank(ineq, rho) != rho) {
      throw Error(Errc::InvalidCone, "polyhedral cone is not pointed: inequalities have a common kernel");
    }
  }
  require_rank(rho, surf.canonical_class.rank(), "canonical_class");
  require_rank(rho, surf.polarization.rank(), "polarization");
  if (!is_interior(surf, surf.polarization)) {
    throw Error(Errc::InvalidSurface,
                "polarization " + to_string(surf.polarization) + " is not strictly inside the cone");
  }
  if (surf.cover_degree != 1 && surf.cover_degree != 2) {
    throw Error(Errc::InvalidSurface, "cover degree must be 1 or 2");
  }
}

SurfaceDatum make_surface(std::string name, NSLattice lattice, ConeModel cone, DivClass canonical,
                          DivClass polarization, int cover_degree) {
  SurfaceDatum s{std::move(name), std::move(lattice), std::move(cone), std::move(canonical),
                 std::move(polarization), cover_degree};
  validate(s);
  return s;
}

SurfaceDatum double_cover(const SurfaceDatum& surf, const DivClass& branch) {
  require_rank(surf.lattice.rank(), branch.rank(), "cover.branch");
  if (surf.cover_degree != 1) throw Error(Errc::InvalidSurface, "surface is already a cover");
  DivClass half(branch.rank());
  for (std::size_t i = 0; i < branch.rank(); ++i) {
    if (!branch[i].is_integer() || branch[i].num() % 2 != 0) {
      throw Error(Errc::BranchNotDivisibleBy2, "branch class " + to_string(branch) + " is not 2 times an integral class");
    }
    half[i] = branch[i] / Rat(2);
  }
  if (!is_interior(surf, half)) {
    throw Error(Errc::BranchNotAmple, "half the branch class " + to_string(half) + " is not strictly inside the cone");
  }
  SurfaceDatum out = surf;
  out.lattice = NSLattice(surf.lattice.basis_labels(), surf.lattice.form().scaled(2));
  out.canonical_class = surf.canonical_class + half;
  out.cover_degree = 2;
  validate(out);
  return out;
}

}  // namespace conesing
