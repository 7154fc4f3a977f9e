#ifndef MOMENTLAB_MATRIX_EXP_HPP
#define MOMENTLAB_MATRIX_EXP_HPP

// Matrix exponential by scaling and squaring around a truncated Taylor series.
// Accurate to ~1e-13 relative for ||A|| <= 10, which covers every use in the
// library (generators of unit-scale words).

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace momentlab::detail {

template <typename Derived>
auto one_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> expm(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  const Eigen::Index n = a.rows();
  eigen_assert(a.cols() == n);
  if (n == 0) return Mat(0, 0);

  // Scale so the series argument has 1-norm <= 1/2.
  const Real norm = one_norm(a);
  int squarings = 0;
  if (norm > Real(0.5)) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / Real(0.5))));
  }
  const Mat scaled = a / std::ldexp(Real(1), squarings);

  Mat result = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 1; k <= 40; ++k) {
    term = (term * scaled) / Real(k);
    result += term;
    if (one_norm(term) <= eps * one_norm(result) * Real(0.25)) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace momentlab::detail

#endif  // MOMENTLAB_MATRIX_EXP_HPP
