#ifndef MOMENTLAB_RANDOM_HPP
#define MOMENTLAB_RANDOM_HPP

// Deterministic, platform-stable sampling. Each stream is keyed by
// (seed, index); per-sample results do not depend on evaluation order.

#include "momentlab/lie_algebra.hpp"
#include "momentlab/representation.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace momentlab {

class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed, std::uint64_t index = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (std::normal_distribution is not
  /// specified bit-for-bit across standard libraries).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0;
    while (u1 <= 0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0;
  bool has_spare_ = false;
};

template <typename Real = double>
AlgebraVector<Real> random_algebra_vector(Eigen::Index n, double scale, SampleRng& rng) {
  VectorX<Real> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Real(rng.uniform(-scale, scale));
  return AlgebraVector<Real>(std::move(v));
}

template <typename Real = double>
GroupWord<Real> random_word(Eigen::Index n, int length, double scale, SampleRng& rng) {
  GroupWord<Real> g;
  for (int l = 0; l < length; ++l) g.letters.push_back(random_algebra_vector<Real>(n, scale, rng));
  return g;
}

/// Uniform on the unit sphere of the validity subspace (normalized complex
/// Gaussian).
template <typename Real = double>
StateVector<Real> random_unit_state(const Representation<Real>& rep, SampleRng& rng) {
  StateVector<Real> x = StateVector<Real>::Zero(rep.dim());
  for (auto m : rep.validity_modes()) {
    const double re = rng.normal();
    const double im = rng.normal();
    x[m] = Complex<Real>(Real(re), Real(im));
  }
  return x / x.norm();
}

}  // namespace momentlab

#endif  // MOMENTLAB_RANDOM_HPP
