#ifndef MOMENTLAB_LIE_ALGEBRA_HPP
#define MOMENTLAB_LIE_ALGEBRA_HPP

// Finite-dimensional real Lie algebras given by structure constants on a fixed
// basis, together with the adjoint and coadjoint actions of the connected group.
//
// Group elements are words g = exp(X_1)...exp(X_m); every element of the
// identity component is such a product.

#include "momentlab/errors.hpp"
#include "momentlab/matrix_exp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace momentlab {

template <typename Real>
using VectorX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real>
using MatrixX = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

struct AlgebraTag {};
struct DualTag {};

/// Coordinates in a fixed basis, tagged by space (g or g'). Arithmetic stays within one space; crossing between them goes
/// through pair() or the (co)adjoint actions.
template <typename Real, typename Tag>
class Coords {
 public:
  using Vector = VectorX<Real>;

  Coords() = default;
  explicit Coords(Vector coords) : coords_(std::move(coords)) {}
  Coords(std::initializer_list<Real> values) : coords_(static_cast<Eigen::Index>(values.size())) {
    std::copy(values.begin(), values.end(), coords_.data());
  }

  static Coords zero(Eigen::Index n) { return Coords(Vector::Zero(n)); }
  static Coords basis(Eigen::Index n, Eigen::Index i) { return Coords(Vector::Unit(n, i)); }

  Eigen::Index size() const { return coords_.size(); }
  const Vector& coords() const { return coords_; }
  Real operator[](Eigen::Index i) const { return coords_[i]; }
  Real& operator[](Eigen::Index i) { return coords_[i]; }

  bool all_finite() const { return coords_.allFinite(); }
  Real max_abs() const { return coords_.size() ? coords_.cwiseAbs().maxCoeff() : Real(0); }

  friend Coords operator+(const Coords& a, const Coords& b) {
    detail::require_dim(b.size(), a.size(), "Coords::operator+");
    return Coords(a.coords_ + b.coords_);
  }
  friend Coords operator-(const Coords& a, const Coords& b) {
    detail::require_dim(b.size(), a.size(), "Coords::operator-");
    return Coords(a.coords_ - b.coords_);
  }
  friend Coords operator-(const Coords& a) { return Coords(-a.coords_); }
  friend Coords operator*(Real s, const Coords& a) { return Coords(s * a.coords_); }
  friend Coords operator*(const Coords& a, Real s) { return Coords(s * a.coords_); }

 private:
  Vector coords_;
};

template <typename Real>
using AlgebraVector = Coords<Real, AlgebraTag>;
template <typename Real>
using DualVector = Coords<Real, DualTag>;

/// g = exp(X_1) exp(X_2) ... exp(X_m). The empty word is the identity.
template <typename Real>
struct GroupWord {
  std::vector<AlgebraVector<Real>> letters;

  bool is_identity() const { return letters.empty(); }

  GroupWord inverse() const {
    GroupWord inv;
    inv.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) inv.letters.push_back(-*it);
    return inv;
  }

  /// Concatenation: (g * h) acts as g after h.
  friend GroupWord operator*(const GroupWord& g, const GroupWord& h) {
    GroupWord out = g;
    out.letters.insert(out.letters.end(), h.letters.begin(), h.letters.end());
    return out;
  }
};

/// One nonzero structure constant [e_i, e_j] ∋ value * e_k, with i < j.
template <typename Real>
struct StructureEntry {
  Eigen::Index i;
  Eigen::Index j;
  Eigen::Index k;
  Real value;
};

/// A real Lie algebra given by [e_i, e_j] = sum_k c[i][j][k] e_k.
///
/// Stored as the adjoint matrices of the basis: ad(e_i)(k, j) = c[i][j][k].
/// Antisymmetry is enforced at construction; the Jacobi identity is not (use
/// jacobi_defect to validate user-supplied constants).
template <typename Real>
class LieAlgebra {
 public:
  static constexpr Real kAntisymmetryTolerance = Real(1e-12);

  /// From a full tensor: tensor[i][j][k] = c[i][j][k].
  LieAlgebra(std::vector<std::string> labels, const std::vector<std::vector<std::vector<Real>>>& tensor)
      : labels_(std::move(labels)) {
    const auto n = static_cast<Eigen::Index>(labels_.size());
    if (n == 0) throw InputError("LieAlgebra: dimension must be positive");
    detail::require_dim(static_cast<Eigen::Index>(tensor.size()), n, "LieAlgebra tensor");
    ad_basis_.assign(n, MatrixX<Real>::Zero(n, n));
    for (Eigen::Index i = 0; i < n; ++i) {
      detail::require_dim(static_cast<Eigen::Index>(tensor[i].size()), n, "LieAlgebra tensor");
      for (Eigen::Index j = 0; j < n; ++j) {
        detail::require_dim(static_cast<Eigen::Index>(tensor[i][j].size()), n, "LieAlgebra tensor");
        for (Eigen::Index k = 0; k < n; ++k) {
          const Real c = tensor[i][j][k];
          if (!std::isfinite(c)) throw InputError("LieAlgebra: non-finite structure constant");
          ad_basis_[i](k, j) = c;
        }
      }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
          if (std::abs(ad_basis_[i](k, j) + ad_basis_[j](k, i)) > kAntisymmetryTolerance) {
            throw InputError("LieAlgebra: structure constants are not antisymmetric at (" +
                             std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                             ")");
          }
        }
      }
    }
  }

  /// From nonzero entries with i < j; the antisymmetric completion is implied.
  LieAlgebra(std::vector<std::string> labels, const std::vector<StructureEntry<Real>>& entries)
      : labels_(std::move(labels)) {
    const auto n = static_cast<Eigen::Index>(labels_.size());
    if (n == 0) throw InputError("LieAlgebra: dimension must be positive");
    ad_basis_.assign(n, MatrixX<Real>::Zero(n, n));
    for (const auto& e : entries) {
      if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= n || e.j >= n || e.k >= n) {
        throw InputError("LieAlgebra: structure index out of range");
      }
      if (e.i >= e.j) throw InputError("LieAlgebra: structure entries must have i < j");
      if (!std::isfinite(e.value)) throw InputError("LieAlgebra: non-finite structure constant");
      ad_basis_[e.i](e.k, e.j) += e.value;
      ad_basis_[e.j](e.k, e.i) -= e.value;
    }
  }

  Eigen::Index dim() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// c[i][j][k].
  Real structure(Eigen::Index i, Eigen::Index j, Eigen::Index k) const { return ad_basis_[i](k, j); }

  /// ad(e_i) as a matrix acting on coordinates.
  const MatrixX<Real>& ad_basis(Eigen::Index i) const { return ad_basis_[i]; }

  /// Nonzero constants with i < j, in lexicographic order.
  std::vector<StructureEntry<Real>> entries() const {
    std::vector<StructureEntry<Real>> out;
    for (Eigen::Index i = 0; i < dim(); ++i)
      for (Eigen::Index j = i + 1; j < dim(); ++j)
        for (Eigen::Index k = 0; k < dim(); ++k)
          if (structure(i, j, k) != Real(0)) out.push_back({i, j, k, structure(i, j, k)});
    return out;
  }

  bool same_structure(const LieAlgebra& other, Real tol = Real(0)) const {
    if (other.dim() != dim()) return false;
    for (Eigen::Index i = 0; i < dim(); ++i)
      if ((ad_basis_[i] - other.ad_basis_[i]).cwiseAbs().maxCoeff() > tol) return false;
    return true;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<MatrixX<Real>> ad_basis_;
};

template <typename Real>
MatrixX<Real> ad_matrix(const LieAlgebra<Real>& alg, const AlgebraVector<Real>& x) {
  detail::require_dim(x.size(), alg.dim(), "ad_matrix");
  MatrixX<Real> m = MatrixX<Real>::Zero(alg.dim(), alg.dim());
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    if (x[i] != Real(0)) m += x[i] * alg.ad_basis(i);
  }
  return m;
}

template <typename Real>
AlgebraVector<Real> bracket(const LieAlgebra<Real>& alg, const AlgebraVector<Real>& x,
                            const AlgebraVector<Real>& y) {
  detail::require_dim(y.size(), alg.dim(), "bracket");
  return AlgebraVector<Real>(ad_matrix(alg, x) * y.coords());
}

/// Max over basis triples of the Jacobiator's max-norm.
template <typename Real>
Real jacobi_defect(const LieAlgebra<Real>& alg) {
  const auto n = alg.dim();
  Real worst = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ei = AlgebraVector<Real>::basis(n, i);
      const auto ej = AlgebraVector<Real>::basis(n, j);
      const auto eij = bracket(alg, ei, ej);
      for (Eigen::Index k = 0; k < n; ++k) {
        const auto ek = AlgebraVector<Real>::basis(n, k);
        const auto jac = bracket(alg, eij, ek) + bracket(alg, bracket(alg, ej, ek), ei) +
                         bracket(alg, bracket(alg, ek, ei), ej);
        worst = std::max(worst, jac.max_abs());
      }
    }
  }
  return worst;
}

/// Matrix of Ad(g) = exp(ad X_1) ... exp(ad X_m).
template <typename Real>
MatrixX<Real> adjoint_matrix(const LieAlgebra<Real>& alg, const GroupWord<Real>& g) {
  MatrixX<Real> m = MatrixX<Real>::Identity(alg.dim(), alg.dim());
  for (const auto& letter : g.letters) m = m * detail::expm(ad_matrix(alg, letter));
  return m;
}

template <typename Real>
AlgebraVector<Real> adjoint_action(const LieAlgebra<Real>& alg, const GroupWord<Real>& g,
                                   const AlgebraVector<Real>& x) {
  detail::require_dim(x.size(), alg.dim(), "adjoint_action");
  return AlgebraVector<Real>(adjoint_matrix(alg, g) * x.coords());
}

/// Ad'(g) xi = xi o Ad(g^{-1}): the transpose of Ad(g^{-1}) applied to coordinates.
template <typename Real>
DualVector<Real> coadjoint_action(const LieAlgebra<Real>& alg, const GroupWord<Real>& g,
                                  const DualVector<Real>& xi) {
  detail::require_dim(xi.size(), alg.dim(), "coadjoint_action");
  return DualVector<Real>(adjoint_matrix(alg, g.inverse()).transpose() * xi.coords());
}

template <typename Real>
Real pair(const DualVector<Real>& xi, const AlgebraVector<Real>& x) {
  detail::require_dim(x.size(), xi.size(), "pair");
  return xi.coords().dot(x.coords());
}

/// Catalog algebras.
namespace algebras {

/// su(2): [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
template <typename Real = double>
LieAlgebra<Real> su2() {
  return LieAlgebra<Real>({"e1", "e2", "e3"}, std::vector<StructureEntry<Real>>{
                                                  {0, 1, 2, Real(1)}, {1, 2, 0, Real(1)}, {0, 2, 1, Real(-1)}});
}

/// Heisenberg algebra on (Q, P, Z) with [Q, P] = Z and Z central.
template <typename Real = double>
LieAlgebra<Real> heisenberg() {
  return LieAlgebra<Real>({"Q", "P", "Z"}, std::vector<StructureEntry<Real>>{{0, 1, 2, Real(1)}});
}

template <typename Real = double>
LieAlgebra<Real> abelian(Eigen::Index n) {
  std::vector<std::string> labels;
  for (Eigen::Index i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i + 1));
  return LieAlgebra<Real>(std::move(labels), std::vector<StructureEntry<Real>>{});
}

/// Lie algebra of the circle group U(1).
template <typename Real = double>
LieAlgebra<Real> circle() {
  return LieAlgebra<Real>({"t"}, std::vector<StructureEntry<Real>>{});
}

}  // namespace algebras
}  // namespace momentlab

#endif  // MOMENTLAB_LIE_ALGEBRA_HPP
