#ifndef MOMENTLAB_ORBIT_LAB_HPP
#define MOMENTLAB_ORBIT_LAB_HPP

// Experiments on where the unit sphere goes under mu: Casimir statistics over
// the sphere and over single group orbits, and the Heisenberg expectation
// table. Everything is reported raw under the library conventions; for the
// spin-j representation a highest-weight vector lands on the coadjoint
// sphere of radius j/2 (su2 quadratic Casimir j^2/4).

#include "momentlab/lie_algebra.hpp"
#include "momentlab/moment_map.hpp"
#include "momentlab/representation.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace momentlab {

using Context = MomentContext<double>;
using State = StateVector<double>;

/// A named polynomial invariant on g'.
struct CasimirSpec {
  std::string name;
  DualPolynomial<double> polynomial;

  double operator()(const DualVector<double>& xi) const { return polynomial(xi); }

  /// xi_1^2 + xi_2^2 + xi_3^2 on su(2)*.
  static CasimirSpec su2_quadratic();
  /// xi_Z on the Heisenberg dual (Z is the third basis vector).
  static CasimirSpec heisenberg_center();
  /// Looks up a builtin by name and checks it matches the algebra dimension.
  static CasimirSpec builtin(const std::string& name, Eigen::Index algebra_dim);
};

struct SurveyRecord {
  std::size_t index = 0;
  std::string state_digest;
  std::vector<double> mu;
  double casimir = 0;
  double norm = 0;
};

struct SurveyAggregates {
  double min = 0;
  double max = 0;
  double mean = 0;
  /// Equal-width bins over [min, max].
  std::vector<std::size_t> histogram;

  double spread() const { return max - min; }
};

struct SurveyConfig {
  std::string kind;  // "sphere" or "orbit"
  std::size_t count = 0;
  int length = 0;
  double scale = 0;
  std::uint64_t seed = 0;
};

struct SurveyReport {
  std::string representation;
  std::string casimir;
  /// Length of each mu record (fixes the CSV header even with no records).
  Eigen::Index algebra_dim = 0;
  SurveyConfig config;
  std::vector<SurveyRecord> records;
  SurveyAggregates aggregates;

  std::size_t sample_count() const { return records.size(); }
};

inline constexpr std::size_t kHistogramBins = 10;

/// FNV-1a over the IEEE bit patterns of (Re, Im) pairs, as 16 hex digits.
std::string state_digest(const State& x);

SurveyAggregates aggregate(const std::vector<SurveyRecord>& records);

GroupWord<double> sample_group_word(const LieAlgebra<double>& alg, int length, double scale, std::uint64_t seed);

double casimir_invariance_defect(const LieAlgebra<double>& alg, const CasimirSpec& spec, int trials,
                                 std::uint64_t seed);

SurveyReport sphere_survey(const Context& ctx, const CasimirSpec& spec, std::size_t samples, std::uint64_t seed);

/// Record 0 is x0; record i >= 1 is rho(g_i) x0 for a random word g_i.
SurveyReport orbit_survey(const Context& ctx, const CasimirSpec& spec, const State& x0, std::size_t words,
                          int length, double scale, std::uint64_t seed);

struct ExpectationRow {
  double mu_q = 0;
  double mu_p = 0;
  double mu_z = 0;
  /// 1/2 <X x, x> and 1/2 <P x, x> from the Hermitian operators directly.
  double half_position = 0;
  double half_momentum = 0;

  double defect() const;
};

std::vector<ExpectationRow> expectation_table(const Context& ctx, const std::vector<State>& states);

/// rho(exp(X)) e_0 restricted to the validity modes and renormalized.
State displaced_ground_state(const Context& ctx, const AlgebraVector<double>& x);

}  // namespace momentlab

#endif  // MOMENTLAB_ORBIT_LAB_HPP
