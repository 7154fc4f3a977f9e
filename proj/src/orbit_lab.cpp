#include "momentlab/orbit_lab.hpp"

#include "momentlab/errors.hpp"
#include "momentlab/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

namespace momentlab {

CasimirSpec CasimirSpec::su2_quadratic() {
  using Term = DualPolynomial<double>::Term;
  return {"su2_quadratic", DualPolynomial<double>(3, {Term{1.0, {0, 0}}, Term{1.0, {1, 1}}, Term{1.0, {2, 2}}})};
}

CasimirSpec CasimirSpec::heisenberg_center() {
  using Term = DualPolynomial<double>::Term;
  return {"heisenberg_center", DualPolynomial<double>(3, {Term{1.0, {2}}})};
}

CasimirSpec CasimirSpec::builtin(const std::string& name, Eigen::Index algebra_dim) {
  if (name != "su2_quadratic" && name != "heisenberg_center") throw InputError("unknown Casimir '" + name + "'");
  auto spec = name == "su2_quadratic" ? su2_quadratic() : heisenberg_center();
  if (spec.polynomial.dim() != algebra_dim) {
    throw InputError("Casimir '" + name + "' does not match an algebra of dimension " + std::to_string(algebra_dim));
  }
  return spec;
}

std::string state_digest(const State& x) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    feed(x[k].real());
    feed(x[k].imag());
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SurveyAggregates aggregate(const std::vector<SurveyRecord>& records) {
  SurveyAggregates agg;
  agg.histogram.assign(kHistogramBins, 0);
  if (records.empty()) return agg;
  agg.min = agg.max = records.front().casimir;
  double sum = 0;
  for (const auto& r : records) {
    agg.min = std::min(agg.min, r.casimir);
    agg.max = std::max(agg.max, r.casimir);
    sum += r.casimir;
  }
  agg.mean = sum / static_cast<double>(records.size());
  const double width = agg.max - agg.min;
  for (const auto& r : records) {
    std::size_t bin = 0;
    if (width > 0) {
      bin = static_cast<std::size_t>((r.casimir - agg.min) / width * static_cast<double>(kHistogramBins));
      bin = std::min(bin, kHistogramBins - 1);
    }
    ++agg.histogram[bin];
  }
  return agg;
}

GroupWord<double> sample_group_word(const LieAlgebra<double>& alg, int length, double scale, std::uint64_t seed) {
  if (length < 0) throw InputError("sample_group_word: length must be nonnegative");
  if (!(scale > 0)) throw InputError("sample_group_word: scale must be positive");
  SampleRng rng(seed);
  return random_word<double>(alg.dim(), length, scale, rng);
}

double casimir_invariance_defect(const LieAlgebra<double>& alg, const CasimirSpec& spec, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw InputError("casimir_invariance_defect: trials must be positive");
  detail::require_dim(spec.polynomial.dim(), alg.dim(), "casimir_invariance_defect");
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    SampleRng rng(seed, static_cast<std::uint64_t>(t));
    const DualVector<double> xi(random_algebra_vector<double>(alg.dim(), 1.0, rng).coords());
    const auto g = random_word<double>(alg.dim(), 3, 1.0, rng);
    worst = std::max(worst, std::abs(spec(coadjoint_action(alg, g, xi)) - spec(xi)));
  }
  return worst;
}

namespace {

SurveyRecord make_record(const Context& ctx, const CasimirSpec& spec, std::size_t index, const State& x) {
  const auto mu = moment(ctx, x);
  SurveyRecord r;
  r.index = index;
  r.state_digest = state_digest(x);
  r.mu.assign(mu.coords().data(), mu.coords().data() + mu.size());
  r.casimir = spec(mu);
  r.norm = x.norm();
  if (!std::isfinite(r.casimir) || !mu.all_finite()) {
    throw NumericError("survey: non-finite value at sample " + std::to_string(index));
  }
  return r;
}

}  // namespace

SurveyReport sphere_survey(const Context& ctx, const CasimirSpec& spec, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw InputError("sphere_survey: samples must be positive");
  detail::require_dim(spec.polynomial.dim(), ctx.algebra().dim(), "sphere_survey");
  SurveyReport report;
  report.representation = ctx.rep().descriptor();
  report.casimir = spec.name;
  report.algebra_dim = ctx.algebra().dim();
  report.config = {"sphere", samples, 0, 0.0, seed};
  report.records.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    SampleRng rng(seed, i);
    report.records.push_back(make_record(ctx, spec, i, random_unit_state(ctx.rep(), rng)));
  }
  report.aggregates = aggregate(report.records);
  return report;
}

SurveyReport orbit_survey(const Context& ctx, const CasimirSpec& spec, const State& x0, std::size_t words,
                          int length, double scale, std::uint64_t seed) {
  ctx.space().check(x0, "orbit_survey");
  detail::require_dim(spec.polynomial.dim(), ctx.algebra().dim(), "orbit_survey");
  if (std::abs(x0.norm() - 1.0) > 1e-12) throw InputError("orbit_survey: x0 must have unit norm");
  if (!ctx.rep().in_validity_subspace(x0)) throw InputError("orbit_survey: x0 outside validity subspace");
  if (length < 0) throw InputError("orbit_survey: length must be nonnegative");
  if (!(scale > 0)) throw InputError("orbit_survey: scale must be positive");

  SurveyReport report;
  report.representation = ctx.rep().descriptor();
  report.casimir = spec.name;
  report.algebra_dim = ctx.algebra().dim();
  report.config = {"orbit", words, length, scale, seed};
  report.records.push_back(make_record(ctx, spec, 0, x0));
  for (std::size_t i = 1; i <= words; ++i) {
    SampleRng rng(seed, i);
    const auto g = random_word<double>(ctx.algebra().dim(), length, scale, rng);
    report.records.push_back(make_record(ctx, spec, i, State(rho(ctx.rep(), g) * x0)));
  }
  report.aggregates = aggregate(report.records);
  return report;
}

double ExpectationRow::defect() const {
  return std::max(std::abs(mu_q - half_position), std::abs(mu_p - half_momentum));
}

std::vector<ExpectationRow> expectation_table(const Context& ctx, const std::vector<State>& states) {
  if (ctx.rep().kind() != RepresentationKind::heisenberg_truncated) {
    throw InputError("expectation_table: requires a truncated Heisenberg representation, got " +
                     ctx.rep().descriptor());
  }
  const int modes = static_cast<int>(ctx.rep().dim());
  const auto position = catalog::position_operator<double>(modes);
  const auto momentum = catalog::momentum_operator<double>(modes);
  std::vector<ExpectationRow> rows;
  rows.reserve(states.size());
  for (const auto& x : states) {
    ctx.space().check(x, "expectation_table");
    if (std::abs(x.norm() - 1.0) > 1e-12) throw InputError("expectation_table: states must have unit norm");
    if (!ctx.rep().in_validity_subspace(x)) throw InputError("expectation_table: state outside validity subspace");
    const auto mu = moment(ctx, x);
    ExpectationRow row;
    row.mu_q = mu[0];
    row.mu_p = mu[1];
    row.mu_z = mu[2];
    // <H x, x> is real for Hermitian H.
    row.half_position = 0.5 * x.dot(position * x).real();
    row.half_momentum = 0.5 * x.dot(momentum * x).real();
    rows.push_back(row);
  }
  return rows;
}

State displaced_ground_state(const Context& ctx, const AlgebraVector<double>& x) {
  const auto d = ctx.rep().dim();
  const State moved = rho(ctx.rep(), GroupWord<double>{{x}}) * State(State::Unit(d, 0));
  const State kept = ctx.rep().project_to_validity(moved);
  return kept / kept.norm();
}

}  // namespace momentlab
