#include "test_support.hpp"

#include "momentlab/errors.hpp"
#include "momentlab/orbit_lab.hpp"

#include <doctest.h>

#include <numbers>

using namespace momentlab;
using namespace momentlab::testing;

namespace {

const Cd I(0, 1);

bool same_word(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size()) return false;
  for (std::size_t k = 0; k < a.letters.size(); ++k)
    if ((a.letters[k] - b.letters[k]).max_abs() != 0.0) return false;
  return true;
}

CasimirSpec xi3() { return {"xi3", DualPolynomial<double>(3, {{1.0, {2}}})}; }

}  // namespace

TEST_CASE("sample_group_word") {
  const auto alg = algebras::su2();
  CHECK(sample_group_word(alg, 0, 1.0, 42).is_identity());
  const auto a = sample_group_word(alg, 2, 1.0, 42);
  CHECK(a.letters.size() == 2);
  CHECK(same_word(a, sample_group_word(alg, 2, 1.0, 42)));
  for (const auto& l : a.letters) CHECK(l.max_abs() <= 1.0);
  for (std::uint64_t s = 0; s < 100; ++s) CHECK_FALSE(same_word(sample_group_word(alg, 2, 1.0, 2 * s),
                                                                sample_group_word(alg, 2, 1.0, 2 * s + 1)));
  for (const auto& l : sample_group_word(alg, 5, 0.25, 7).letters) CHECK(l.max_abs() <= 0.25);
  CHECK_THROWS_AS(sample_group_word(alg, -1, 1.0, 0), InputError);
  CHECK_THROWS_AS(sample_group_word(alg, 1, 0.0, 0), InputError);
}

TEST_CASE("Casimir invariance") {
  CHECK(casimir_invariance_defect(algebras::heisenberg(), CasimirSpec::heisenberg_center(), 100, 1) <= 1e-12);
  CHECK(casimir_invariance_defect(algebras::su2(), CasimirSpec::su2_quadratic(), 100, 2) <= 1e-10);
  CHECK(casimir_invariance_defect(algebras::su2(), xi3(), 100, 3) > 0.1);
  CHECK_THROWS_AS(casimir_invariance_defect(algebras::su2(), CasimirSpec::su2_quadratic(), 0, 3), InputError);
  CHECK_THROWS_AS(CasimirSpec::builtin("su2_quadratic", 4), InputError);
  CHECK_THROWS_AS(CasimirSpec::builtin("nope", 3), InputError);
  CHECK(CasimirSpec::builtin("heisenberg_center", 3).name == "heisenberg_center");
}

TEST_CASE("sphere survey on spin-1/2 is a single orbit") {
  const Context ctx(catalog::su2_spin(1));
  const auto s = sphere_survey(ctx, CasimirSpec::su2_quadratic(), 1000, 0);
  REQUIRE(s.sample_count() == 1000);
  for (const auto& r : s.records) {
    CHECK(std::abs(r.casimir - 1.0 / 16) <= 1e-12);
    CHECK(std::abs(r.norm - 1.0) <= 1e-12);
  }
  CHECK(s.aggregates.spread() <= 1e-12);
  CHECK(s.aggregates.histogram.size() == kHistogramBins);
}

TEST_CASE("sphere survey on spin-1 spreads across orbits") {
  const Context ctx(catalog::su2_spin(2));
  const auto spec = CasimirSpec::su2_quadratic();
  // Weight vectors pin the ends of the range.
  CHECK(spec(moment(ctx, state({0, 1, 0}))) == doctest::Approx(0.0));
  CHECK(spec(moment(ctx, state({1, 0, 0}))) == doctest::Approx(0.25).epsilon(1e-14));

  const auto s = sphere_survey(ctx, spec, 1000, 0);
  CHECK(s.aggregates.min <= 1e-3);
  CHECK(s.aggregates.max >= 0.249);
  CHECK(s.aggregates.max <= 0.25 + 1e-12);
  std::size_t total = 0;
  for (auto c : s.aggregates.histogram) total += c;
  CHECK(total == 1000);
}

TEST_CASE("sphere survey on truncated Heisenberg") {
  const Context ctx(catalog::heisenberg_truncated(16));
  const auto s = sphere_survey(ctx, CasimirSpec::heisenberg_center(), 200, 5);
  for (const auto& r : s.records) CHECK(std::abs(r.casimir + 0.5) <= 1e-12);
}

TEST_CASE("surveys are deterministic per seed") {
  const Context ctx(catalog::su2_spin(3));
  const auto a = sphere_survey(ctx, CasimirSpec::su2_quadratic(), 20, 9);
  const auto b = sphere_survey(ctx, CasimirSpec::su2_quadratic(), 20, 9);
  const auto c = sphere_survey(ctx, CasimirSpec::su2_quadratic(), 20, 10);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(a.records[i].state_digest == b.records[i].state_digest);
    CHECK(a.records[i].casimir == b.records[i].casimir);
    CHECK(a.records[i].state_digest != c.records[i].state_digest);
  }
}

TEST_CASE("orbit survey") {
  const Context ctx(catalog::su2_spin(2));
  const auto spec = CasimirSpec::su2_quadratic();
  const auto top = state({1, 0, 0});

  const auto single = orbit_survey(ctx, spec, top, 0, 3, 1.0, 1);
  REQUIRE(single.sample_count() == 1);
  CHECK(single.records[0].state_digest == state_digest(top));

  const auto coherent = orbit_survey(ctx, spec, top, 200, 3, 1.0, 2);
  CHECK(coherent.sample_count() == 201);
  for (const auto& r : coherent.records) CHECK(std::abs(r.casimir - 0.25) <= 1e-9);

  const auto zero = orbit_survey(ctx, spec, state({0, 1, 0}), 200, 3, 1.0, 3);
  for (const auto& r : zero.records) CHECK(std::abs(r.casimir) <= 1e-9);

  SampleRng rng(4);
  const auto generic = random_unit_state(ctx.rep(), rng);
  CHECK(orbit_survey(ctx, spec, generic, 100, 3, 1.0, 4).aggregates.spread() <= 1e-9);

  CHECK_THROWS_AS(orbit_survey(ctx, spec, state({1, 1, 0}), 5, 3, 1.0, 1), InputError);
  CHECK_THROWS_AS(orbit_survey(ctx, spec, state({1, 0}), 5, 3, 1.0, 1), InputError);

  const Context h(catalog::heisenberg_truncated(8));
  CVec edge = CVec::Zero(8);
  edge[7] = 1;
  CHECK_THROWS_AS(orbit_survey(h, CasimirSpec::heisenberg_center(), edge, 5, 3, 0.5, 1), InputError);
}

TEST_CASE("aggregates") {
  std::vector<SurveyRecord> recs(4);
  recs[0].casimir = 0;
  recs[1].casimir = 1;
  recs[2].casimir = 0.55;
  recs[3].casimir = 0.5;
  const auto agg = aggregate(recs);
  CHECK(agg.min == 0);
  CHECK(agg.max == 1);
  CHECK(agg.mean == doctest::Approx(0.5125));
  CHECK(agg.histogram[0] == 1);
  CHECK(agg.histogram[5] == 2);
  CHECK(agg.histogram[9] == 1);
  CHECK(aggregate({}).histogram.size() == kHistogramBins);
}

TEST_CASE("expectation table") {
  const int n = 16;
  const Context ctx(catalog::heisenberg_truncated(n));
  const auto rows = expectation_table(ctx, {CVec(CVec::Unit(n, 0)), CVec(CVec::Unit(n, 1))});
  for (const auto& r : rows) {
    CHECK(std::abs(r.mu_q) < 1e-15);
    CHECK(std::abs(r.mu_p) < 1e-15);
    CHECK(r.mu_z == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(r.defect() <= 1e-12);
  }

  // exp(-isP) X exp(isP) = X - s, so the displaced ground state has <X> = -s.
  for (double s : {0.3, -0.5}) {
    const CVec x = displaced_ground_state(ctx, AVec{0, s, 0});
    const CVec full = rho(ctx.rep(), Word{{AVec{0, s, 0}}}) * CVec(CVec::Unit(n, 0));
    CHECK((x - full).norm() < 1e-10);
    const auto row = expectation_table(ctx, {x}).front();
    CHECK(row.defect() <= 1e-12);
    CHECK(std::abs(row.mu_p) < 1e-12);
    CHECK(row.half_position == doctest::Approx(-0.5 * s).epsilon(1e-10));
  }

  CHECK_THROWS_AS(expectation_table(Context(catalog::su2_spin(1)), {state({1, 0})}), InputError);
  CHECK_THROWS_AS(expectation_table(ctx, {CVec(2.0 * CVec::Unit(n, 0))}), InputError);
}

TEST_CASE("state digests") {
  CHECK(state_digest(state({1, 0})).size() == 16);
  CHECK(state_digest(state({1, 0})) != state_digest(state({0, 1})));
  CHECK(state_digest(state({I})) == state_digest(state({I})));
}
