#include "momentlab/harness.hpp"

#include "momentlab/errors.hpp"
#include "momentlab/moment_map.hpp"
#include "momentlab/random.hpp"

#include <cmath>

namespace momentlab::harness {

namespace {

CheckRecord check(const json& echo, const std::string& operation, double defect, double tolerance) {
  if (!std::isfinite(defect)) throw NumericError(operation + ": non-finite defect");
  return {operation, digest(echo.dump() + "|" + operation), defect, tolerance, defect <= tolerance};
}

Tolerances<double> context_tolerances(const ExperimentTolerances& t) { return {t.defect, t.rank, t.fd_step}; }

std::string default_casimir(const LieAlgebra<double>& alg) {
  if (alg.same_structure(algebras::su2())) return "su2_quadratic";
  if (alg.same_structure(algebras::heisenberg())) return "heisenberg_center";
  throw InputError("no builtin Casimir for this algebra; set \"casimir\"");
}

std::vector<State> random_states(const Representation<double>& rep, std::size_t count, std::uint64_t seed,
                                 std::uint64_t stream) {
  std::vector<State> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SampleRng rng(seed, (stream << 32) + i);
    out.push_back(random_unit_state(rep, rng));
  }
  return out;
}

void run_validity(const ExperimentConfig& cfg, const Representation<double>& rep, const json& echo, Report& report) {
  const auto v = validity_defects(rep);
  report.checks.push_back(check(echo, "validity.skewness", v.skewness, cfg.tolerances.validity));
  report.checks.push_back(check(echo, "validity.bracket", v.bracket, cfg.tolerances.validity));
  report.checks.push_back(check(echo, "validity.jacobi", jacobi_defect(rep.algebra()), cfg.tolerances.validity));
}

void run_equivariance(const ExperimentConfig& cfg, const Context& ctx, const json& echo, Report& report) {
  const double tol = cfg.tolerances.equivariance.value_or(
      ctx.rep().kind() == RepresentationKind::heisenberg_truncated ? 1e-8 : 1e-9);
  EquivarianceDefect<double> worst;
  for (std::size_t w = 0; w < cfg.words; ++w) {
    SampleRng rng(cfg.seed, w);
    const auto g = random_word<double>(ctx.algebra().dim(), cfg.length, cfg.scale, rng);
    const auto states = random_states(ctx.rep(), cfg.samples, cfg.seed, w + 1);
    const auto d = equivariance_defect(ctx, g, states);
    worst.mu_defect = std::max(worst.mu_defect, d.mu_defect);
    worst.sigma_defect = std::max(worst.sigma_defect, d.sigma_defect);
  }
  report.checks.push_back(check(echo, "equivariance.mu", worst.mu_defect, tol));
  report.checks.push_back(check(echo, "equivariance.sigma", worst.sigma_defect, tol));
}

void run_rank(const ExperimentConfig& cfg, const Context& ctx, const json& echo, Report& report) {
  double inconsistent = 0;
  double residual = 0;
  for (const auto& x : random_states(ctx.rep(), cfg.samples, cfg.seed, 0)) {
    const auto r = rank_analysis(ctx, x);
    if (!r.consistent) inconsistent += 1;
    residual = std::max(residual, r.annihilator_residual);
  }
  report.checks.push_back(check(echo, "rank.inconsistent_states", inconsistent, 0.0));
  report.checks.push_back(check(echo, "rank.annihilator_residual", residual, cfg.tolerances.defect));
}

void run_pullback(const ExperimentConfig& cfg, const Context& ctx, const json& echo, Report& report) {
  const auto n = ctx.algebra().dim();
  const auto samples = random_states(ctx.rep(), cfg.samples, cfg.seed, 0);
  using Poly = DualPolynomial<double>;

  std::vector<Poly> linear;
  for (Eigen::Index i = 0; i < n; ++i) linear.push_back(Poly::linear(AlgebraVector<double>::basis(n, i)));

  // Sum of squares, plus two random degree-2 polynomials.
  std::vector<Poly> quadratic;
  std::vector<Poly::Term> squares;
  for (Eigen::Index i = 0; i < n; ++i) squares.push_back({1.0, {i, i}});
  quadratic.emplace_back(n, squares);
  SampleRng rng(cfg.seed, 1ULL << 40);
  for (int p = 0; p < 2; ++p) {
    std::vector<Poly::Term> terms{{rng.uniform(-1, 1), {}}};
    for (Eigen::Index i = 0; i < n; ++i) {
      terms.push_back({rng.uniform(-1, 1), {i}});
      for (Eigen::Index j = i; j < n; ++j) terms.push_back({rng.uniform(-1, 1), {i, j}});
    }
    quadratic.emplace_back(n, terms);
  }

  double linear_defect = 0;
  for (const auto& f : linear)
    for (const auto& g : linear) linear_defect = std::max(linear_defect, pullback_poisson_check(ctx, f, g, samples));
  double quadratic_defect = 0;
  for (const auto& f : quadratic) {
    for (const auto& g : linear) quadratic_defect = std::max(quadratic_defect, pullback_poisson_check(ctx, f, g, samples));
    for (const auto& g : quadratic)
      quadratic_defect = std::max(quadratic_defect, pullback_poisson_check(ctx, f, g, samples));
  }
  report.checks.push_back(check(echo, "pullback.linear", linear_defect, cfg.tolerances.pullback));
  report.checks.push_back(check(echo, "pullback.quadratic", quadratic_defect, cfg.tolerances.pullback));
}

void run_orbit_survey(const ExperimentConfig& cfg, const Context& ctx, const json& echo, Report& report) {
  const auto spec = CasimirSpec::builtin(cfg.casimir.value_or(default_casimir(ctx.algebra())), ctx.algebra().dim());
  State x0 = State::Zero(ctx.rep().dim());
  if (cfg.x0) {
    x0 = *cfg.x0;
    ctx.space().check(x0, "x0");
  } else {
    x0[ctx.rep().validity_modes().front()] = 1.0;
  }
  report.survey = orbit_survey(ctx, spec, x0, cfg.words, cfg.length, cfg.scale, cfg.seed);
  report.checks.push_back(check(echo, "orbit_survey.casimir_spread", report.survey->aggregates.spread(),
                                cfg.tolerances.orbit_spread));
}

void run_expectation(const ExperimentConfig& cfg, const Context& ctx, const json& echo, Report& report) {
  if (ctx.rep().kind() != RepresentationKind::heisenberg_truncated) {
    throw InputError("expectation experiment requires a heisenberg representation");
  }
  const auto d = ctx.rep().dim();
  std::vector<State> states{State::Unit(d, 0), State::Unit(d, 1)};
  // Ground state displaced along P and Q.
  for (const auto& x : {AlgebraVector<double>{0, 0.3, 0}, AlgebraVector<double>{0, -0.5, 0},
                        AlgebraVector<double>{0.4, 0, 0}}) {
    states.push_back(displaced_ground_state(ctx, x));
  }
  states.resize(std::min(states.size(), cfg.samples));
  const auto extra = random_states(ctx.rep(), cfg.samples - states.size(), cfg.seed, 0);
  states.insert(states.end(), extra.begin(), extra.end());
  report.expectation = expectation_table(ctx, states);
  double worst = 0;
  for (const auto& row : report.expectation) worst = std::max(worst, row.defect());
  report.checks.push_back(check(echo, "expectation.columns", worst, cfg.tolerances.expectation));
}

}  // namespace

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Report run_experiment(const ExperimentConfig& cfg) {
  Report report;
  report.config = cfg.echo();
  report.experiment = to_string(cfg.experiment);
  const auto rep = build_representation(cfg.rep.document);
  report.representation = rep.descriptor();
  const auto& echo = report.config;

  if (cfg.experiment == ExperimentKind::validity) {
    run_validity(cfg, rep, echo, report);
    return report;
  }
  const Context ctx(rep, context_tolerances(cfg.tolerances));
  switch (cfg.experiment) {
    case ExperimentKind::equivariance:
      run_equivariance(cfg, ctx, echo, report);
      break;
    case ExperimentKind::rank:
      run_rank(cfg, ctx, echo, report);
      break;
    case ExperimentKind::cocycle:
      report.checks.push_back(check(echo, "cocycle",
                                    cocycle_defect(ctx, static_cast<int>(cfg.trials), cfg.seed),
                                    cfg.tolerances.defect));
      break;
    case ExperimentKind::pullback:
      run_pullback(cfg, ctx, echo, report);
      break;
    case ExperimentKind::sphere_survey: {
      const auto spec =
          CasimirSpec::builtin(cfg.casimir.value_or(default_casimir(ctx.algebra())), ctx.algebra().dim());
      report.survey = sphere_survey(ctx, spec, cfg.samples, cfg.seed);
      break;
    }
    case ExperimentKind::orbit_survey:
      run_orbit_survey(cfg, ctx, echo, report);
      break;
    case ExperimentKind::expectation:
      run_expectation(cfg, ctx, echo, report);
      break;
    case ExperimentKind::validity:
      break;
  }
  return report;
}

}  // namespace momentlab::harness
