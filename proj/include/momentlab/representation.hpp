#ifndef MOMENTLAB_REPRESENTATION_HPP
#define MOMENTLAB_REPRESENTATION_HPP

// Finite-dimensional unitary representations given by skew-Hermitian
// generators A_i = rho'(e_i). At finite dimension every vector is smooth, so
// the space of smooth vectors is the whole Hilbert space.

#include "momentlab/errors.hpp"
#include "momentlab/lie_algebra.hpp"
#include "momentlab/matrix_exp.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace momentlab {

template <typename Real>
using Complex = std::complex<Real>;
template <typename Real>
using ComplexMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using StateVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

enum class RepresentationKind { custom, su2_spin, heisenberg_truncated, circle, direct_sum };

template <typename Real>
class Representation {
 public:
  /// `validity_modes` lists the basis indices spanning the subspace on which
  /// the bracket relations hold; empty means the whole space.
  Representation(LieAlgebra<Real> algebra, std::vector<ComplexMatrix<Real>> generators,
                 std::vector<Eigen::Index> validity_modes = {},
                 RepresentationKind kind = RepresentationKind::custom, std::string descriptor = "custom")
      : algebra_(std::move(algebra)),
        generators_(std::move(generators)),
        kind_(kind),
        descriptor_(std::move(descriptor)) {
    detail::require_dim(static_cast<Eigen::Index>(generators_.size()), algebra_.dim(),
                        "Representation generators");
    dim_ = generators_.front().rows();
    if (dim_ <= 0) throw InputError("Representation: dimension must be positive");
    for (const auto& a : generators_) {
      if (a.rows() != dim_ || a.cols() != dim_) {
        throw InputError("Representation: generators must all be square of the same size");
      }
      if (!a.allFinite()) throw InputError("Representation: non-finite generator entry");
    }
    if (validity_modes.empty()) {
      validity_modes.resize(dim_);
      std::iota(validity_modes.begin(), validity_modes.end(), Eigen::Index(0));
    }
    std::sort(validity_modes.begin(), validity_modes.end());
    validity_modes.erase(std::unique(validity_modes.begin(), validity_modes.end()), validity_modes.end());
    for (auto m : validity_modes) {
      if (m < 0 || m >= dim_) throw InputError("Representation: validity mode out of range");
    }
    validity_modes_ = std::move(validity_modes);
  }

  const LieAlgebra<Real>& algebra() const { return algebra_; }
  Eigen::Index dim() const { return dim_; }
  const std::vector<ComplexMatrix<Real>>& generators() const { return generators_; }
  const ComplexMatrix<Real>& generator(Eigen::Index i) const { return generators_[i]; }
  const std::vector<Eigen::Index>& validity_modes() const { return validity_modes_; }
  RepresentationKind kind() const { return kind_; }
  const std::string& descriptor() const { return descriptor_; }

  bool validity_is_full() const { return static_cast<Eigen::Index>(validity_modes_.size()) == dim_; }

  /// True if x has no weight (beyond tol) outside the validity subspace.
  bool in_validity_subspace(const StateVector<Real>& x, Real tol = Real(1e-12)) const {
    return (x - project_to_validity(x)).cwiseAbs().maxCoeff() <= tol;
  }

  StateVector<Real> project_to_validity(const StateVector<Real>& x) const {
    detail::require_dim(x.size(), dim_, "project_to_validity");
    StateVector<Real> out = StateVector<Real>::Zero(dim_);
    for (auto m : validity_modes_) out[m] = x[m];
    return out;
  }

 private:
  LieAlgebra<Real> algebra_;
  std::vector<ComplexMatrix<Real>> generators_;
  Eigen::Index dim_ = 0;
  std::vector<Eigen::Index> validity_modes_;
  RepresentationKind kind_;
  std::string descriptor_;
};

template <typename Real>
ComplexMatrix<Real> rho_prime(const Representation<Real>& rep, const AlgebraVector<Real>& x) {
  detail::require_dim(x.size(), rep.algebra().dim(), "rho_prime");
  ComplexMatrix<Real> m = ComplexMatrix<Real>::Zero(rep.dim(), rep.dim());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] != Real(0)) m += x[i] * rep.generator(i);
  }
  return m;
}

/// rho(g) = exp(rho'(X_1)) ... exp(rho'(X_m)).
template <typename Real>
ComplexMatrix<Real> rho(const Representation<Real>& rep, const GroupWord<Real>& g) {
  ComplexMatrix<Real> u = ComplexMatrix<Real>::Identity(rep.dim(), rep.dim());
  for (const auto& letter : g.letters) u = u * detail::expm(rho_prime(rep, letter));
  return u;
}

template <typename Real>
Real unitarity_defect(const ComplexMatrix<Real>& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - ComplexMatrix<Real>::Identity(n, n)).cwiseAbs().maxCoeff();
}

template <typename Real>
struct ValidityDefects {
  Real skewness = 0;
  Real bracket = 0;
};

/// Max-entry norms of A_i + A_i^* and of [A_i, A_j] - sum_k c_ijk A_k, the
/// latter applied to the validity subspace.
template <typename Real>
ValidityDefects<Real> validity_defects(const Representation<Real>& rep) {
  ValidityDefects<Real> out;
  // Non-finite entries make the defect infinite.
  auto worst = [](Real acc, const auto& m) {
    return m.allFinite() ? std::max(acc, m.cwiseAbs().maxCoeff()) : std::numeric_limits<Real>::infinity();
  };
  const auto n = rep.algebra().dim();
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& a = rep.generator(i);
    out.skewness = worst(out.skewness, (a + a.adjoint()).eval());
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      ComplexMatrix<Real> r = rep.generator(i) * rep.generator(j) - rep.generator(j) * rep.generator(i);
      for (Eigen::Index k = 0; k < n; ++k) r -= rep.algebra().structure(i, j, k) * rep.generator(k);
      for (auto m : rep.validity_modes()) out.bracket = worst(out.bracket, r.col(m).eval());
    }
  }
  return out;
}

namespace detail {

/// The 2d x n real matrix of X -> rho'(X) x, rows (Re; Im).
template <typename Real>
MatrixX<Real> orbit_tangent_matrix(const Representation<Real>& rep, const StateVector<Real>& x) {
  const auto n = rep.algebra().dim();
  const auto d = rep.dim();
  MatrixX<Real> m(2 * d, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const StateVector<Real> ax = rep.generator(i) * x;
    m.col(i).head(d) = ax.real();
    m.col(i).tail(d) = ax.imag();
  }
  return m;
}

/// Orthonormal basis (as columns) of the null space of m, singular values
/// counted as zero below rel_tol * sigma_max.
template <typename Real>
MatrixX<Real> null_space(const MatrixX<Real>& m, Real rel_tol) {
  if (m.size() == 0) return MatrixX<Real>::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<MatrixX<Real>> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Real smax = s.size() ? s.maxCoeff() : Real(0);
  Eigen::Index rank = 0;
  if (smax > Real(0)) {
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s[i] > rel_tol * smax) ++rank;
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

template <typename Real>
Eigen::Index numerical_rank(const MatrixX<Real>& m, Real rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixX<Real>> svd(m);
  const auto& s = svd.singularValues();
  const Real smax = s.size() ? s.maxCoeff() : Real(0);
  if (!(smax > Real(0))) return 0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > rel_tol * smax) ++rank;
  return rank;
}

}  // namespace detail

/// Orthonormal basis of g_x = {X : rho'(X) x = 0}.
template <typename Real>
std::vector<AlgebraVector<Real>> isotropy_algebra(const Representation<Real>& rep, const StateVector<Real>& x,
                                                  Real tol = Real(1e-8)) {
  detail::require_dim(x.size(), rep.dim(), "isotropy_algebra");
  if (x.cwiseAbs().maxCoeff() == Real(0)) {
    throw InputError("isotropy_algebra: x = 0 (isotropy is all of g)");
  }
  const MatrixX<Real> basis = detail::null_space(detail::orbit_tangent_matrix(rep, x), tol);
  std::vector<AlgebraVector<Real>> out;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) out.emplace_back(VectorX<Real>(basis.col(c)));
  return out;
}

/// Built-in representations.
namespace catalog {

/// Spin j = two_j / 2: A_k = -i J_k with J_3 = diag(j, j-1, ..., -j).
struct Su2Spin {
  int two_j = 1;
};
/// First n Hermite modes of the Schroedinger representation.
struct HeisenbergTruncated {
  int modes = 16;
};
/// U(1) acting on C by e^{ik t}.
struct Circle {
  int charge = 0;
};
struct Spec;
struct DirectSum {
  std::vector<Spec> parts;
};
struct Spec {
  std::variant<Su2Spin, HeisenbergTruncated, Circle, DirectSum> kind;
};

/// Standard spin matrices (J_1, J_2, J_3) in the basis m = j, j-1, ..., -j.
template <typename Real = double>
std::array<ComplexMatrix<Real>, 3> spin_matrices(int two_j) {
  if (two_j < 0) throw InputError("spin_matrices: j must be a nonnegative half-integer");
  const Eigen::Index d = two_j + 1;
  const Real j = Real(two_j) / 2;
  ComplexMatrix<Real> jp = ComplexMatrix<Real>::Zero(d, d);
  ComplexMatrix<Real> j3 = ComplexMatrix<Real>::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const Real m = j - Real(r);
    j3(r, r) = m;
    // J_+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, and |m+1> sits at index r-1.
    if (r > 0) jp(r - 1, r) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const ComplexMatrix<Real> jm = jp.adjoint();
  const Complex<Real> i(0, 1);
  return {(jp + jm) / Real(2), (jp - jm) / (Real(2) * i), j3};
}

/// Truncated annihilation operator: a e_n = sqrt(n) e_{n-1}.
template <typename Real = double>
ComplexMatrix<Real> ladder_lowering(int modes) {
  ComplexMatrix<Real> a = ComplexMatrix<Real>::Zero(modes, modes);
  for (int n = 1; n < modes; ++n) a(n - 1, n) = std::sqrt(Real(n));
  return a;
}

/// Hermitian position (a + a^+)/sqrt 2 on the truncation.
template <typename Real = double>
ComplexMatrix<Real> position_operator(int modes) {
  const auto a = ladder_lowering<Real>(modes);
  return (a + a.adjoint()) / std::sqrt(Real(2));
}

/// Hermitian momentum (a - a^+)/(i sqrt 2) on the truncation.
template <typename Real = double>
ComplexMatrix<Real> momentum_operator(int modes) {
  const auto a = ladder_lowering<Real>(modes);
  return (a - a.adjoint()) / (Complex<Real>(0, 1) * std::sqrt(Real(2)));
}

inline std::string two_j_label(int two_j) {
  return two_j % 2 == 0 ? std::to_string(two_j / 2) : std::to_string(two_j) + "/2";
}

template <typename Real = double>
Representation<Real> su2_spin(int two_j) {
  if (two_j < 0) throw InputError("su2_spin: j must be a nonnegative half-integer");
  const auto js = spin_matrices<Real>(two_j);
  const Complex<Real> mi(0, -1);
  std::vector<ComplexMatrix<Real>> gens{mi * js[0], mi * js[1], mi * js[2]};
  return Representation<Real>(algebras::su2<Real>(), std::move(gens), {}, RepresentationKind::su2_spin,
                              "su2_spin(j=" + two_j_label(two_j) + ")");
}

/// A_Q = i X, A_P = i P, A_Z = -i I on `modes` Hermite modes; the validity
/// subspace drops the top two modes, where the truncated [a, a^+] is wrong.
template <typename Real = double>
Representation<Real> heisenberg_truncated(int modes) {
  if (modes < 4) throw InputError("heisenberg_truncated: N must be at least 4");
  const Complex<Real> i(0, 1);
  std::vector<ComplexMatrix<Real>> gens{i * position_operator<Real>(modes), i * momentum_operator<Real>(modes),
                                        -i * ComplexMatrix<Real>::Identity(modes, modes)};
  std::vector<Eigen::Index> valid(modes - 2);
  std::iota(valid.begin(), valid.end(), Eigen::Index(0));
  return Representation<Real>(algebras::heisenberg<Real>(), std::move(gens), std::move(valid),
                              RepresentationKind::heisenberg_truncated,
                              "heisenberg_truncated(N=" + std::to_string(modes) + ")");
}

template <typename Real = double>
Representation<Real> circle(int charge) {
  ComplexMatrix<Real> a(1, 1);
  a(0, 0) = Complex<Real>(0, Real(charge));
  return Representation<Real>(algebras::circle<Real>(), {a}, {}, RepresentationKind::circle,
                              "circle(k=" + std::to_string(charge) + ")");
}

/// Block-diagonal sum over a shared algebra.
template <typename Real = double>
Representation<Real> direct_sum(const std::vector<Representation<Real>>& parts) {
  if (parts.empty()) throw InputError("direct_sum: needs at least one summand");
  const auto& alg = parts.front().algebra();
  Eigen::Index total = 0;
  for (const auto& p : parts) {
    if (!p.algebra().same_structure(alg)) throw InputError("direct_sum: summands act on different algebras");
    total += p.dim();
  }
  std::vector<ComplexMatrix<Real>> gens(alg.dim(), ComplexMatrix<Real>::Zero(total, total));
  std::vector<Eigen::Index> valid;
  std::string descriptor = "direct_sum(";
  Eigen::Index offset = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const auto& p = parts[s];
    for (Eigen::Index i = 0; i < alg.dim(); ++i) gens[i].block(offset, offset, p.dim(), p.dim()) = p.generator(i);
    for (auto m : p.validity_modes()) valid.push_back(offset + m);
    descriptor += (s ? "," : "") + p.descriptor();
    offset += p.dim();
  }
  return Representation<Real>(alg, std::move(gens), std::move(valid), RepresentationKind::direct_sum,
                              descriptor + ")");
}

template <typename Real = double>
Representation<Real> build(const Spec& spec) {
  return std::visit(
      [](const auto& k) -> Representation<Real> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Su2Spin>) {
          return su2_spin<Real>(k.two_j);
        } else if constexpr (std::is_same_v<K, HeisenbergTruncated>) {
          return heisenberg_truncated<Real>(k.modes);
        } else if constexpr (std::is_same_v<K, Circle>) {
          return circle<Real>(k.charge);
        } else {
          std::vector<Representation<Real>> parts;
          for (const auto& p : k.parts) parts.push_back(build<Real>(p));
          return direct_sum<Real>(parts);
        }
      },
      spec.kind);
}

}  // namespace catalog
}  // namespace momentlab

#endif  // MOMENTLAB_REPRESENTATION_HPP
