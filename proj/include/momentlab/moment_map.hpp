#ifndef MOMENTLAB_MOMENT_MAP_HPP
#define MOMENTLAB_MOMENT_MAP_HPP

// The Hamiltonian lift sigma(X)(x) = 1/2 omega(rho'(X) x, x) and the moment
// mapping mu(x)(X) = sigma(X)(x), together with numerical checks of their
// structural properties:
//
//   d mu(x) y (X) = omega(rho'(X) x, y)
//   im d mu(x)    = annihilator of the isotropy algebra g_x
//   ker d mu(x)   = omega-annihilator of the orbit tangent space
//   Ad'(g) o mu   = mu o rho(g)
//   {sigma(X), sigma(Y)} = sigma([X, Y])
//   mu^* is a Poisson homomorphism from (g', Lie-Poisson) to (H, omega)
//
// sigma is normalized by sigma(X)(0) = 0, so no constant offsets exist.

#include "momentlab/errors.hpp"
#include "momentlab/lie_algebra.hpp"
#include "momentlab/random.hpp"
#include "momentlab/representation.hpp"
#include "momentlab/symplectic.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace momentlab {

template <typename Real>
struct Tolerances {
  Real defect = Real(1e-10);
  Real rank = Real(1e-8);
  Real fd_step = Real(1e-5);
};

enum class ValidityCheck { enforce, skip };

/// Binds a representation to its Hermitian space. By default the
/// representation must pass validity_defects within `tolerances.defect`;
/// `ValidityCheck::skip` admits deliberately inconsistent inputs.
template <typename Real>
class MomentContext {
 public:
  explicit MomentContext(Representation<Real> rep, Tolerances<Real> tol = {},
                         ValidityCheck check = ValidityCheck::enforce)
      : rep_(std::move(rep)), sp_(rep_.dim()), tol_(tol) {
    if (check == ValidityCheck::enforce) {
      const auto v = validity_defects(rep_);
      if (v.skewness > tol_.defect || v.bracket > tol_.defect) {
        throw InputError("MomentContext: representation fails validity (skewness " + std::to_string(v.skewness) +
                         ", bracket " + std::to_string(v.bracket) + ")");
      }
    }
  }

  const Representation<Real>& rep() const { return rep_; }
  const HermitianSpace<Real>& space() const { return sp_; }
  const LieAlgebra<Real>& algebra() const { return rep_.algebra(); }
  const Tolerances<Real>& tolerances() const { return tol_; }

 private:
  Representation<Real> rep_;
  HermitianSpace<Real> sp_;
  Tolerances<Real> tol_;
};

template <typename Real>
QuadraticObservable<Real> sigma(const MomentContext<Real>& ctx, const AlgebraVector<Real>& x) {
  return QuadraticObservable<Real>(rho_prime(ctx.rep(), x));
}

template <typename Real>
DualVector<Real> moment(const MomentContext<Real>& ctx, const StateVector<Real>& x) {
  ctx.space().check(x, "moment");
  const auto n = ctx.algebra().dim();
  VectorX<Real> mu(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    mu[i] = Real(0.5) * omega(ctx.space(), StateVector<Real>(ctx.rep().generator(i) * x), x);
  }
  return DualVector<Real>(std::move(mu));
}

template <typename Real>
DualVector<Real> moment_differential(const MomentContext<Real>& ctx, const StateVector<Real>& x,
                                     const StateVector<Real>& y) {
  ctx.space().check(x, "moment_differential");
  ctx.space().check(y, "moment_differential");
  const auto n = ctx.algebra().dim();
  VectorX<Real> out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out[i] = omega(ctx.space(), StateVector<Real>(ctx.rep().generator(i) * x), y);
  }
  return DualVector<Real>(std::move(out));
}

namespace detail {

/// Real coordinates (Re y; Im y) <-> complex y.
template <typename Real>
VectorX<Real> realify(const StateVector<Real>& y) {
  VectorX<Real> out(2 * y.size());
  out << y.real(), y.imag();
  return out;
}

template <typename Real>
StateVector<Real> complexify(const Eigen::Ref<const VectorX<Real>>& v) {
  const auto d = v.size() / 2;
  StateVector<Real> out(d);
  for (Eigen::Index k = 0; k < d; ++k) out[k] = Complex<Real>(v[k], v[d + k]);
  return out;
}

/// n x 2d matrix of d mu(x) in the real coordinates (Re y; Im y).
/// omega(eta, y) = Im(eta) . Re(y) - Re(eta) . Im(y).
template <typename Real>
MatrixX<Real> moment_differential_matrix(const MomentContext<Real>& ctx, const StateVector<Real>& x) {
  const auto n = ctx.algebra().dim();
  const auto d = ctx.rep().dim();
  MatrixX<Real> m(n, 2 * d);
  for (Eigen::Index i = 0; i < n; ++i) {
    const StateVector<Real> eta = ctx.rep().generator(i) * x;
    m.row(i).head(d) = eta.imag().transpose();
    m.row(i).tail(d) = -eta.real().transpose();
  }
  return m;
}

/// Orthonormal basis of the column space, rank by relative threshold.
template <typename Real>
MatrixX<Real> range_basis(const MatrixX<Real>& m, Real rel_tol) {
  if (m.size() == 0) return MatrixX<Real>(m.rows(), 0);
  Eigen::JacobiSVD<MatrixX<Real>> svd(m, Eigen::ComputeFullU);
  return svd.matrixU().leftCols(numerical_rank(m, rel_tol));
}

/// Largest principal angle between two subspaces given by orthonormal
/// columns; pi/2 if the dimensions differ.
template <typename Real>
Real max_principal_angle(const MatrixX<Real>& a, const MatrixX<Real>& b) {
  if (a.cols() != b.cols()) return Real(std::numbers::pi / 2);
  if (a.cols() == 0) return Real(0);
  const MatrixX<Real> residual = b - a * (a.transpose() * b);
  Eigen::JacobiSVD<MatrixX<Real>> svd(residual);
  const Real s = std::min(Real(1), svd.singularValues().maxCoeff());
  return std::asin(s);
}

}  // namespace detail

template <typename Real>
struct RankAnalysis {
  int rank = 0;
  int isotropy_dim = 0;
  int kernel_dim = 0;
  int orbit_tangent_dim = 0;
  bool consistent = false;
  /// max over kernel basis y and generators of |omega(y, A_i x)|.
  Real annihilator_residual = 0;
  /// Only filled by a strict analysis; NaN otherwise.
  Real image_angle = std::numeric_limits<Real>::quiet_NaN();
  Real kernel_angle = std::numeric_limits<Real>::quiet_NaN();
  std::vector<AlgebraVector<Real>> isotropy;
  std::vector<StateVector<Real>> kernel;
};

/// Subspace comparisons in a strict analysis pass below this angle.
inline constexpr double kPrincipalAngleTolerance = 1e-6;

/// Dimension counts for the image and kernel of d mu(x). A strict analysis
/// additionally compares the subspaces themselves by principal angles, each
/// side computed from its own decomposition.
template <typename Real>
RankAnalysis<Real> rank_analysis(const MomentContext<Real>& ctx, const StateVector<Real>& x, bool strict = false) {
  ctx.space().check(x, "rank_analysis");
  if (x.cwiseAbs().maxCoeff() == Real(0)) throw InputError("rank_analysis: x = 0");
  const auto n = ctx.algebra().dim();
  const auto d = ctx.rep().dim();
  const Real rtol = ctx.tolerances().rank;

  RankAnalysis<Real> out;
  const MatrixX<Real> dmu = detail::moment_differential_matrix(ctx, x);
  const MatrixX<Real> tangent = detail::orbit_tangent_matrix(ctx.rep(), x);
  out.rank = static_cast<int>(detail::numerical_rank(dmu, rtol));
  out.isotropy = isotropy_algebra(ctx.rep(), x, rtol);
  out.isotropy_dim = static_cast<int>(out.isotropy.size());
  out.orbit_tangent_dim = static_cast<int>(detail::numerical_rank(tangent, rtol));

  const MatrixX<Real> kernel = detail::null_space(dmu, rtol);
  out.kernel_dim = static_cast<int>(kernel.cols());
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    out.kernel.push_back(detail::complexify<Real>(kernel.col(c)));
    for (Eigen::Index i = 0; i < n; ++i) {
      const Real r =
          std::abs(omega(ctx.space(), out.kernel.back(), StateVector<Real>(ctx.rep().generator(i) * x)));
      out.annihilator_residual = std::max(out.annihilator_residual, r);
    }
  }
  const Real scale = std::max(Real(1), dmu.size() ? dmu.cwiseAbs().maxCoeff() : Real(0));

  out.consistent = out.rank + out.isotropy_dim == n && out.kernel_dim == 2 * d - out.orbit_tangent_dim &&
                   out.annihilator_residual <= ctx.tolerances().defect * scale;

  if (strict) {
    // Image of d mu(x) vs the annihilator of g_x in g' (Euclidean complement
    // of the isotropy basis, since the pairing is the coordinate dot product).
    MatrixX<Real> iso(out.isotropy_dim, n);
    for (int r = 0; r < out.isotropy_dim; ++r) iso.row(r) = out.isotropy[r].coords().transpose();
    const MatrixX<Real> annihilator =
        out.isotropy_dim ? detail::null_space(iso, rtol) : MatrixX<Real>::Identity(n, n);
    out.image_angle = detail::max_principal_angle(detail::range_basis(dmu, rtol), annihilator);

    // Kernel vs {y : omega(y, t) = 0 for t in the orbit tangent}. In real
    // coordinates omega(u, v) = u^T J v with J = [[0, -I], [I, 0]].
    MatrixX<Real> j = MatrixX<Real>::Zero(2 * d, 2 * d);
    j.topRightCorner(d, d) = -MatrixX<Real>::Identity(d, d);
    j.bottomLeftCorner(d, d) = MatrixX<Real>::Identity(d, d);
    const MatrixX<Real> tangent_basis = detail::range_basis(tangent, rtol);
    const MatrixX<Real> omega_annihilator =
        tangent_basis.cols() ? detail::null_space(MatrixX<Real>((j * tangent_basis).transpose()), rtol)
                             : MatrixX<Real>::Identity(2 * d, 2 * d);
    out.kernel_angle = detail::max_principal_angle(kernel, omega_annihilator);
    out.consistent = out.consistent && out.image_angle <= Real(kPrincipalAngleTolerance) &&
                     out.kernel_angle <= Real(kPrincipalAngleTolerance);
  }
  return out;
}

template <typename Real>
struct EquivarianceDefect {
  Real mu_defect = 0;
  Real sigma_defect = 0;
};

template <typename Real>
EquivarianceDefect<Real> equivariance_defect(const MomentContext<Real>& ctx, const GroupWord<Real>& g,
                                             const std::vector<StateVector<Real>>& samples) {
  if (samples.empty()) throw InputError("equivariance_defect: no samples");
  const auto n = ctx.algebra().dim();
  const ComplexMatrix<Real> u = rho(ctx.rep(), g);
  const MatrixX<Real> ad_inv = adjoint_matrix(ctx.algebra(), g.inverse());
  std::vector<QuadraticObservable<Real>> lifted;
  for (Eigen::Index i = 0; i < n; ++i) {
    lifted.push_back(sigma(ctx, AlgebraVector<Real>(VectorX<Real>(ad_inv.col(i)))));
  }

  EquivarianceDefect<Real> out;
  for (const auto& x : samples) {
    ctx.space().check(x, "equivariance_defect");
    if (!ctx.rep().in_validity_subspace(x)) throw InputError("equivariance_defect: sample outside validity subspace");
    const StateVector<Real> gx = u * x;
    const auto lhs = coadjoint_action(ctx.algebra(), g, moment(ctx, x));
    const auto rhs = moment(ctx, gx);
    out.mu_defect = std::max(out.mu_defect, (lhs - rhs).max_abs());
    for (Eigen::Index i = 0; i < n; ++i) {
      const Real a = eval_quadratic(ctx.space(), sigma(ctx, AlgebraVector<Real>::basis(n, i)), gx);
      const Real b = eval_quadratic(ctx.space(), lifted[i], x);
      out.sigma_defect = std::max(out.sigma_defect, std::abs(a - b));
    }
  }
  return out;
}

/// max |{sigma(X), sigma(Y)}(x) - sigma([X, Y])(x)| over random X, Y in
/// [-1, 1]^n and unit x in the validity subspace.
template <typename Real>
Real cocycle_defect(const MomentContext<Real>& ctx, int trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("cocycle_defect: trials must be positive");
  const auto n = ctx.algebra().dim();
  Real worst = 0;
  for (int t = 0; t < trials; ++t) {
    SampleRng rng(seed, static_cast<std::uint64_t>(t));
    const auto x_alg = random_algebra_vector<Real>(n, 1.0, rng);
    const auto y_alg = random_algebra_vector<Real>(n, 1.0, rng);
    const auto state = random_unit_state(ctx.rep(), rng);
    const Real lhs = poisson(ctx.space(), sigma(ctx, x_alg), sigma(ctx, y_alg), state);
    const Real rhs = eval_quadratic(ctx.space(), sigma(ctx, bracket(ctx.algebra(), x_alg, y_alg)), state);
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
      throw NumericError("cocycle_defect: non-finite value at trial " + std::to_string(t));
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

/// Polynomial of degree <= 2 on g': c + l(xi) + xi^T Q xi with Q symmetric.
template <typename Real>
class DualPolynomial {
 public:
  /// A monomial: coefficient times the product of xi_k over `factors`
  /// (so {0, 0} is xi_1^2 and {} is the constant term).
  struct Term {
    Real coefficient;
    std::vector<Eigen::Index> factors;
  };

  explicit DualPolynomial(Eigen::Index n) : linear_(VectorX<Real>::Zero(n)), quadratic_(MatrixX<Real>::Zero(n, n)) {}

  DualPolynomial(Eigen::Index n, const std::vector<Term>& terms) : DualPolynomial(n) {
    for (const auto& t : terms) {
      for (auto k : t.factors)
        if (k < 0 || k >= n) throw InputError("DualPolynomial: variable index out of range");
      switch (t.factors.size()) {
        case 0:
          constant_ += t.coefficient;
          break;
        case 1:
          linear_[t.factors[0]] += t.coefficient;
          break;
        case 2: {
          const auto a = t.factors[0];
          const auto b = t.factors[1];
          quadratic_(a, b) += t.coefficient / 2;
          quadratic_(b, a) += t.coefficient / 2;
          break;
        }
        default:
          throw InputError("DualPolynomial: degree " + std::to_string(t.factors.size()) + " exceeds 2");
      }
    }
  }

  /// xi -> xi(X).
  static DualPolynomial linear(const AlgebraVector<Real>& x) {
    DualPolynomial p(x.size());
    p.linear_ = x.coords();
    return p;
  }

  Eigen::Index dim() const { return linear_.size(); }
  Real constant() const { return constant_; }
  const VectorX<Real>& linear_part() const { return linear_; }
  const MatrixX<Real>& quadratic_part() const { return quadratic_; }

  Real operator()(const DualVector<Real>& xi) const {
    detail::require_dim(xi.size(), dim(), "DualPolynomial");
    return constant_ + linear_.dot(xi.coords()) + xi.coords().dot(quadratic_ * xi.coords());
  }

  /// df(xi) as an element of g (the bidual).
  AlgebraVector<Real> differential(const DualVector<Real>& xi) const {
    detail::require_dim(xi.size(), dim(), "DualPolynomial");
    return AlgebraVector<Real>(linear_ + Real(2) * quadratic_ * xi.coords());
  }

 private:
  Real constant_ = 0;
  VectorX<Real> linear_;
  MatrixX<Real> quadratic_;
};

/// {f, g}(xi) = xi([df(xi), dg(xi)]). The plus sign makes mu^* a
/// homomorphism on linear functions, where f o mu = sigma(X_f).
template <typename Real>
Real lie_poisson(const LieAlgebra<Real>& alg, const DualPolynomial<Real>& f, const DualPolynomial<Real>& g,
                 const DualVector<Real>& xi) {
  return pair(xi, bracket(alg, f.differential(xi), g.differential(xi)));
}

/// max over samples of |{f o mu, g o mu}(x) - {f, g}_LP(mu(x))|, with the
/// gradients of the composites taken by finite differences.
template <typename Real>
Real pullback_poisson_check(const MomentContext<Real>& ctx, const DualPolynomial<Real>& f,
                            const DualPolynomial<Real>& g, const std::vector<StateVector<Real>>& samples) {
  detail::require_dim(f.dim(), ctx.algebra().dim(), "pullback_poisson_check");
  detail::require_dim(g.dim(), ctx.algebra().dim(), "pullback_poisson_check");
  const auto& sp = ctx.space();
  const Real h = ctx.tolerances().fd_step;
  auto pulled = [&ctx](const DualPolynomial<Real>& p) {
    return [&ctx, &p](const StateVector<Real>& y) { return p(moment(ctx, y)); };
  };
  Real worst = 0;
  for (const auto& x : samples) {
    if (!ctx.rep().in_validity_subspace(x)) throw InputError("pullback_poisson_check: sample outside validity subspace");
    const auto grad_f = fd_gradient(sp, pulled(f), x, h);
    const auto grad_g = fd_gradient(sp, pulled(g), x, h);
    const Real lhs = omega(sp, grad_f, grad_g);
    const Real rhs = lie_poisson(ctx.algebra(), f, g, moment(ctx, x));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace momentlab

#endif  // MOMENTLAB_MOMENT_MAP_HPP
