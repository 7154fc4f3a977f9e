#include "test_support.hpp"

#include "momentlab/errors.hpp"
#include "momentlab/matrix_exp.hpp"

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <numbers>

using namespace momentlab;
using namespace momentlab::testing;

namespace {

const double kPi = std::numbers::pi;

AVec e(Eigen::Index n, Eigen::Index i) { return AVec::basis(n, i); }

Word word_of(AVec x) { return Word{{std::move(x)}}; }

}  // namespace

TEST_CASE("bracket on the catalog algebras") {
  const auto su2 = algebras::su2();
  CHECK((bracket(su2, e(3, 0), e(3, 1)) - e(3, 2)).max_abs() == 0.0);
  CHECK((bracket(su2, e(3, 1), e(3, 2)) - e(3, 0)).max_abs() == 0.0);
  CHECK((bracket(su2, e(3, 2), e(3, 0)) - e(3, 1)).max_abs() == 0.0);

  const auto h = algebras::heisenberg();
  CHECK((bracket(h, e(3, 0), e(3, 1)) - e(3, 2)).max_abs() == 0.0);
  CHECK(bracket(h, e(3, 0), e(3, 2)).max_abs() == 0.0);
  CHECK(bracket(h, e(3, 1), e(3, 2)).max_abs() == 0.0);

  SampleRng rng(11);
  for (const auto& alg : {su2, h, algebras::abelian(4)}) {
    const auto x = random_algebra_vector(alg.dim(), 2.0, rng);
    CHECK(bracket(alg, x, x).max_abs() == 0.0);
  }
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  const auto alg = algebras::su2();
  SampleRng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_algebra_vector(3, 1.0, rng);
    const auto y = random_algebra_vector(3, 1.0, rng);
    const auto z = random_algebra_vector(3, 1.0, rng);
    const double a = rng.uniform(-2, 2);
    CHECK((bracket(alg, x, y) + bracket(alg, y, x)).max_abs() < 1e-15);
    CHECK((bracket(alg, a * x + z, y) - (a * bracket(alg, x, y) + bracket(alg, z, y))).max_abs() < 1e-14);
  }
}

TEST_CASE("bracket rejects mismatched dimensions") {
  CHECK_THROWS_AS(bracket(algebras::su2(), e(3, 0), e(2, 0)), InputError);
  CHECK_THROWS_AS(ad_matrix(algebras::su2(), e(4, 0)), InputError);
}

TEST_CASE("structure constants are validated") {
  std::vector<std::vector<std::vector<double>>> c(2, std::vector<std::vector<double>>(2, std::vector<double>(2, 0)));
  c[0][1][0] = 1;  // not antisymmetric
  CHECK_THROWS_AS(LieAlgebra<double>({"a", "b"}, c), InputError);
  c[1][0][0] = -1;
  const LieAlgebra<double> affine({"a", "b"}, c);
  CHECK((bracket(affine, e(2, 0), e(2, 1)) - e(2, 0)).max_abs() == 0.0);
  CHECK_THROWS_AS(LieAlgebra<double>({"a", "b"}, {{1, 0, 0, 1.0}}), InputError);
  CHECK_THROWS_AS(LieAlgebra<double>({"a", "b"}, {{0, 2, 0, 1.0}}), InputError);
}

TEST_CASE("jacobi defect") {
  CHECK(jacobi_defect(algebras::su2()) == 0.0);
  CHECK(jacobi_defect(algebras::heisenberg()) == 0.0);
  CHECK(jacobi_defect(algebras::abelian(5)) == 0.0);

  // Rescaling one constant of su(2) still gives a Lie algebra: in three
  // dimensions the only Jacobi triple is (e1, e2, e3) and each term is a
  // self-bracket.
  const LieAlgebra<double> rescaled({"e1", "e2", "e3"}, {{0, 1, 2, 1.1}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}});
  CHECK(jacobi_defect(rescaled) < 1e-15);

  // [e1, e2] = e3 + 0.1 e1: the Jacobiator on (e1, e2, e3) is 0.1 [e1, e3] = -0.1 e2.
  const LieAlgebra<double> broken({"e1", "e2", "e3"},
                                  {{0, 1, 2, 1.0}, {0, 1, 0, 0.1}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}});
  CHECK(jacobi_defect(broken) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("ad_matrix") {
  const MatrixX<double> rot = ad_matrix(algebras::su2(), e(3, 2));
  MatrixX<double> want = MatrixX<double>::Zero(3, 3);
  want(1, 0) = 1;   // e1 -> e2
  want(0, 1) = -1;  // e2 -> -e1
  CHECK((rot - want).cwiseAbs().maxCoeff() == 0.0);

  SampleRng rng(5);
  CHECK(ad_matrix(algebras::abelian(4), random_algebra_vector(4, 1.0, rng)).cwiseAbs().maxCoeff() == 0.0);

  const MatrixX<double> q = ad_matrix(algebras::heisenberg(), e(3, 0));
  MatrixX<double> qwant = MatrixX<double>::Zero(3, 3);
  qwant(2, 1) = 1;
  CHECK((q - qwant).cwiseAbs().maxCoeff() == 0.0);

  // ad is a representation: ad([x, y]) = [ad x, ad y].
  const auto alg = algebras::su2();
  for (int t = 0; t < 20; ++t) {
    const auto x = random_algebra_vector(3, 1.0, rng);
    const auto y = random_algebra_vector(3, 1.0, rng);
    const MatrixX<double> ax = ad_matrix(alg, x);
    const MatrixX<double> ay = ad_matrix(alg, y);
    CHECK((ad_matrix(alg, bracket(alg, x, y)) - (ax * ay - ay * ax)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("adjoint action") {
  const auto su2 = algebras::su2();
  SampleRng rng(8);
  const auto x = random_algebra_vector(3, 1.0, rng);
  CHECK((adjoint_action(su2, Word{}, x) - x).max_abs() == 0.0);

  const auto quarter = adjoint_action(su2, word_of(kPi / 2 * e(3, 0)), e(3, 2));
  CHECK((quarter - AVec{0, -1, 0}).max_abs() < 1e-12);

  for (double t : {0.3, 1.0, 2.5}) {
    const auto r = adjoint_action(su2, word_of(t * e(3, 0)), e(3, 2));
    CHECK((r - AVec{0, -std::sin(t), std::cos(t)}).max_abs() < 1e-14);
  }

  const auto h = algebras::heisenberg();
  CHECK((adjoint_action(h, word_of(e(3, 0)), e(3, 1)) - AVec{0, 1, 1}).max_abs() < 1e-15);
}

TEST_CASE("adjoint action agrees with an independent matrix exponential") {
  SampleRng rng(21);
  for (const auto& alg : {algebras::su2(), algebras::heisenberg()}) {
    for (int t = 0; t < 20; ++t) {
      const auto g = random_word(alg.dim(), 3, 1.0, rng);
      MatrixX<double> oracle = MatrixX<double>::Identity(alg.dim(), alg.dim());
      for (const auto& letter : g.letters) oracle = oracle * MatrixX<double>(ad_matrix(alg, letter)).exp();
      CHECK((adjoint_matrix(alg, g) - oracle).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("adjoint action is a group action by automorphisms") {
  const auto alg = algebras::su2();
  SampleRng rng(9);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_word(3, 3, 1.0, rng);
    const auto h = random_word(3, 2, 1.0, rng);
    const auto x = random_algebra_vector(3, 1.0, rng);
    const auto y = random_algebra_vector(3, 1.0, rng);
    CHECK((adjoint_action(alg, g * h, x) - adjoint_action(alg, g, adjoint_action(alg, h, x))).max_abs() < 1e-13);
    CHECK((adjoint_action(alg, g, bracket(alg, x, y)) -
           bracket(alg, adjoint_action(alg, g, x), adjoint_action(alg, g, y)))
              .max_abs() < 1e-13);
    CHECK((adjoint_action(alg, g.inverse(), adjoint_action(alg, g, x)) - x).max_abs() < 1e-13);
  }
}

TEST_CASE("coadjoint action") {
  const auto su2 = algebras::su2();
  const DVec xi{0, 0, 1};
  CHECK((coadjoint_action(su2, Word{}, xi) - xi).max_abs() == 0.0);

  const auto flipped = coadjoint_action(su2, word_of(kPi * e(3, 0)), xi);
  CHECK((flipped - DVec{0, 0, -1}).max_abs() < 1e-12);

  // Oracle: Ad'(g) = (Ad(g^{-1}))^T, with Ad(g^{-1}) = exp(-ad X).
  const MatrixX<double> oracle = MatrixX<double>(-kPi * ad_matrix(su2, e(3, 0))).exp().transpose();
  CHECK((flipped.coords() - oracle * xi.coords()).cwiseAbs().maxCoeff() < 1e-13);

  // Z is central, so the Z coordinate is fixed; exp(qQ + pP) translates the
  // (Q, P) coordinates of z eps_Z to (p z, -q z).
  const auto h = algebras::heisenberg();
  SampleRng rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_word(3, 3, 2.0, rng);
    const DVec z{0, 0, rng.uniform(-3, 3)};
    CHECK(std::abs(coadjoint_action(h, g, z)[2] - z[2]) < 1e-14);
    const AVec x = random_algebra_vector(3, 2.0, rng);
    const auto moved = coadjoint_action(h, word_of(x), z);
    CHECK((moved - DVec{x[1] * z[2], -x[0] * z[2], z[2]}).max_abs() < 1e-13);
  }
}

TEST_CASE("coadjoint action is dual to the adjoint action") {
  SampleRng rng(12);
  for (const auto& alg : {algebras::su2(), algebras::heisenberg()}) {
    for (int t = 0; t < 30; ++t) {
      const auto g = random_word(3, 3, 1.0, rng);
      const auto h = random_word(3, 3, 1.0, rng);
      const DVec xi(random_algebra_vector(3, 1.0, rng).coords());
      const auto x = random_algebra_vector(3, 1.0, rng);
      CHECK(pair(coadjoint_action(alg, g, xi), x) ==
            doctest::Approx(pair(xi, adjoint_action(alg, g.inverse(), x))).epsilon(1e-13));
      CHECK((coadjoint_action(alg, g * h, xi) - coadjoint_action(alg, g, coadjoint_action(alg, h, xi))).max_abs() <
            1e-13);
    }
  }
}

TEST_CASE("pairing") {
  CHECK(pair(DVec{1, 0, 0}, AVec{1, 0, 0}) == 1.0);
  CHECK(pair(DVec{0, 0, 0}, AVec{4, -2, 7}) == 0.0);
  CHECK(pair(DVec{1, 2, 3}, AVec{1, 1, 1}) == 6.0);
  CHECK_THROWS_AS(pair(DVec{1, 2}, AVec{1, 1, 1}), InputError);
}

TEST_CASE("group words") {
  const Word g{{AVec{1, 0, 0}, AVec{0, 2, 0}}};
  const auto inv = g.inverse();
  REQUIRE(inv.letters.size() == 2);
  CHECK((inv.letters[0] - AVec{0, -2, 0}).max_abs() == 0.0);
  CHECK((inv.letters[1] - AVec{-1, 0, 0}).max_abs() == 0.0);
  CHECK(Word{}.is_identity());
  CHECK((g * inv).letters.size() == 4);
}

TEST_CASE("matrix exponential matches Eigen's MatrixFunctions") {
  SampleRng rng(2024);
  for (int t = 0; t < 40; ++t) {
    const Eigen::Index d = 2 + t % 7;
    CMat a = random_skew_hermitian(d, rng);
    a *= 10.0 / a.norm() * rng.uniform(0.05, 1.0);
    const CMat got = detail::expm(a);
    const CMat want = a.exp();
    CHECK((got - want).norm() / want.norm() < 1e-13);
  }
  for (int t = 0; t < 40; ++t) {
    const Eigen::Index d = 2 + t % 5;
    MatrixX<double> a(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) a(r, c) = rng.normal();
    a *= 10.0 / a.norm() * rng.uniform(0.05, 1.0);
    const MatrixX<double> got = detail::expm(a);
    const MatrixX<double> want = a.exp();
    CHECK((got - want).norm() / want.norm() < 1e-12);
  }
  CHECK((detail::expm(CMat(CMat::Zero(3, 3))) - CMat::Identity(3, 3)).norm() == 0.0);
}
