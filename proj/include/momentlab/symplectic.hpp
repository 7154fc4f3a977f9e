#ifndef MOMENTLAB_SYMPLECTIC_HPP
#define MOMENTLAB_SYMPLECTIC_HPP

// The realified Hilbert space C^d as a symplectic vector space.
//
// Conventions (fixed throughout the library):
//   <x, y> = sum_i x_i conj(y_i)        linear in the first slot
//   omega(x, y) = Im <x, y>
//   Re <x, y> = omega(i x, y)
//   grad f is the omega-gradient: df(x) y = omega(grad f(x), y)
//   {f, g}(x) = omega(grad f(x), grad g(x))
//
// At finite dimension omega is nondegenerate in the strong sense, so the map
// x -> omega(x, .) is a bijection onto the real dual, and every smooth
// function has an omega-gradient.

#include "momentlab/errors.hpp"
#include "momentlab/representation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

namespace momentlab {

template <typename Real>
class HermitianSpace {
 public:
  explicit HermitianSpace(Eigen::Index dim) : dim_(dim) {
    if (dim_ <= 0) throw InputError("HermitianSpace: dimension must be positive");
    self_test();
  }

  Eigen::Index dim() const { return dim_; }

  /// <x, y>, linear in x.
  Complex<Real> inner(const StateVector<Real>& x, const StateVector<Real>& y) const {
    check(x, "inner");
    check(y, "inner");
    // Eigen's dot conjugates its left operand.
    return y.dot(x);
  }

  void check(const StateVector<Real>& x, const char* what) const { detail::require_dim(x.size(), dim_, what); }

 private:
  void self_test() const {
    StateVector<Real> x = StateVector<Real>::Zero(dim_);
    StateVector<Real> y = StateVector<Real>::Zero(dim_);
    x[0] = Complex<Real>(Real(0.6), Real(-0.3));
    y[0] = Complex<Real>(Real(-0.2), Real(0.9));
    const Complex<Real> i(0, 1);
    const Real lhs = inner(x, y).real();
    const Real rhs = inner(StateVector<Real>(i * x), y).imag();
    if (std::abs(lhs - rhs) > Real(1e-12)) {
      throw NumericError("HermitianSpace: inner-product convention self-test failed");
    }
  }

  Eigen::Index dim_;
};

/// f(x) = 1/2 omega(A x, x) for skew-Hermitian A.
template <typename Real>
class QuadraticObservable {
 public:
  static constexpr Real kSkewTolerance = Real(1e-12);

  explicit QuadraticObservable(ComplexMatrix<Real> matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw InputError("QuadraticObservable: matrix must be square");
    // Tolerance is relative to the largest entry.
    if (matrix_.size() && (matrix_ + matrix_.adjoint()).cwiseAbs().maxCoeff() >
                              kSkewTolerance * std::max(Real(1), matrix_.cwiseAbs().maxCoeff())) {
      throw InputError("QuadraticObservable: matrix is not skew-Hermitian");
    }
  }

  static QuadraticObservable zero(Eigen::Index d) { return QuadraticObservable(ComplexMatrix<Real>::Zero(d, d)); }

  const ComplexMatrix<Real>& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix<Real> matrix_;
};

/// The functional y -> omega(eta, y), stored by its representer eta.
template <typename Real>
struct SmoothDualElement {
  StateVector<Real> representer;
};

/// The functional y -> Re <w, y>.
template <typename Real>
struct RealInnerFunctional {
  StateVector<Real> w;
};

template <typename Real>
Real omega(const HermitianSpace<Real>& sp, const StateVector<Real>& x, const StateVector<Real>& y) {
  return sp.inner(x, y).imag();
}

template <typename Real>
SmoothDualElement<Real> omega_check(const HermitianSpace<Real>& sp, const StateVector<Real>& x) {
  sp.check(x, "omega_check");
  return {x};
}

template <typename Real>
StateVector<Real> omega_uncheck(const HermitianSpace<Real>& sp, const SmoothDualElement<Real>& ell) {
  sp.check(ell.representer, "omega_uncheck");
  return ell.representer;
}

/// Re <w, .> = omega(i w, .).
template <typename Real>
StateVector<Real> omega_uncheck(const HermitianSpace<Real>& sp, const RealInnerFunctional<Real>& ell) {
  sp.check(ell.w, "omega_uncheck");
  return Complex<Real>(0, 1) * ell.w;
}

template <typename Real>
Real evaluate(const HermitianSpace<Real>& sp, const SmoothDualElement<Real>& ell, const StateVector<Real>& y) {
  return omega(sp, ell.representer, y);
}

template <typename Real>
Real eval_quadratic(const HermitianSpace<Real>& sp, const QuadraticObservable<Real>& f, const StateVector<Real>& x) {
  detail::require_dim(f.dim(), sp.dim(), "eval_quadratic");
  sp.check(x, "eval_quadratic");
  return Real(0.5) * omega(sp, StateVector<Real>(f.matrix() * x), x);
}

template <typename Real>
StateVector<Real> grad_quadratic(const HermitianSpace<Real>& sp, const QuadraticObservable<Real>& f,
                                 const StateVector<Real>& x) {
  detail::require_dim(f.dim(), sp.dim(), "grad_quadratic");
  sp.check(x, "grad_quadratic");
  return f.matrix() * x;
}

/// omega-gradient by central differences along the 2d real coordinate
/// directions. df(x) is assembled as Re <w, .> and converted with eta = i w.
template <typename Real, typename Function>
StateVector<Real> fd_gradient(const HermitianSpace<Real>& sp, Function&& f, const StateVector<Real>& x,
                              Real h = Real(1e-5)) {
  sp.check(x, "fd_gradient");
  if (!(h > Real(0))) throw InputError("fd_gradient: step must be positive");
  const auto d = sp.dim();
  const Complex<Real> i(0, 1);
  auto central = [&](const StateVector<Real>& dir) {
    const Real fp = f(StateVector<Real>(x + h * dir));
    const Real fm = f(StateVector<Real>(x - h * dir));
    if (!std::isfinite(fp) || !std::isfinite(fm)) throw NumericError("fd_gradient: non-finite function value");
    return (fp - fm) / (Real(2) * h);
  };
  StateVector<Real> w(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const StateVector<Real> e = StateVector<Real>::Unit(d, k);
    // df(e_k) is the coefficient of Re y_k, df(i e_k) that of Im y_k.
    w[k] = Complex<Real>(central(e), central(StateVector<Real>(i * e)));
  }
  return omega_uncheck(sp, RealInnerFunctional<Real>{w});
}

/// A function bundled with its omega-gradient.
template <typename Real>
struct SmoothFunction {
  std::function<Real(const StateVector<Real>&)> value;
  std::function<StateVector<Real>(const StateVector<Real>&)> gradient;
};

template <typename Real>
SmoothFunction<Real> as_function(const HermitianSpace<Real>& sp, const QuadraticObservable<Real>& f) {
  return {[sp, f](const StateVector<Real>& x) { return eval_quadratic(sp, f, x); },
          [sp, f](const StateVector<Real>& x) { return grad_quadratic(sp, f, x); }};
}

/// Pointwise product with the product-rule gradient.
template <typename Real>
SmoothFunction<Real> operator*(const SmoothFunction<Real>& f, const SmoothFunction<Real>& g) {
  return {[f, g](const StateVector<Real>& x) { return f.value(x) * g.value(x); },
          [f, g](const StateVector<Real>& x) -> StateVector<Real> {
            return f.value(x) * g.gradient(x) + g.value(x) * f.gradient(x);
          }};
}

template <typename Real>
Real poisson(const HermitianSpace<Real>& sp, const SmoothFunction<Real>& f, const SmoothFunction<Real>& g,
             const StateVector<Real>& x) {
  sp.check(x, "poisson");
  return omega(sp, f.gradient(x), g.gradient(x));
}

template <typename Real>
Real poisson(const HermitianSpace<Real>& sp, const QuadraticObservable<Real>& f, const QuadraticObservable<Real>& g,
             const StateVector<Real>& x) {
  return omega(sp, grad_quadratic(sp, f, x), grad_quadratic(sp, g, x));
}

/// {f, g} for quadratics is the quadratic with matrix [A_f, A_g].
template <typename Real>
QuadraticObservable<Real> quadratic_poisson(const QuadraticObservable<Real>& f, const QuadraticObservable<Real>& g) {
  detail::require_dim(g.dim(), f.dim(), "quadratic_poisson");
  return QuadraticObservable<Real>(f.matrix() * g.matrix() - g.matrix() * f.matrix());
}

}  // namespace momentlab

#endif  // MOMENTLAB_SYMPLECTIC_HPP
