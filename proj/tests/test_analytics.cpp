#include <catch_amalgamated.hpp>
#include <cmath>

#include "oracles.hpp"
#include "pdc/analytics.hpp"

using namespace pdc;

namespace {

const std::string kFixtures = PDC_FIXTURES_DIR;

Dag load_dag(const std::string& name) {
  const Digraph d = std::get<Digraph>(read_graph_file(kFixtures + "/" + name));
  return Dag(d.p, d.edges);
}

PartialMatrix load_mat(const std::string& name) {
  return read_partial_matrix_file(kFixtures + "/" + name);
}

double rel_frobenius(const SymMatrix& a, const SymMatrix& b) {
  return (a - b).frobenius_norm() / std::max(1e-300, b.frobenius_norm());
}

}  // namespace

TEST_CASE("closed-form inverse of the 5x5 example") {
  const Dag d = load_dag("closed_form_inverse_5x5.dag");
  const PartialMatrix g = load_mat("closed_form_inverse_5x5.mat");
  const InverseReport r = markov_inverse(g, d);
  const auto expected = SymMatrix::from_rows({{1, 1, 0, -1, 0},
                                              {1, 2, 0, -1, 1},
                                              {0, 0, 1, -1, 1},
                                              {-1, -1, -1, 3, -1},
                                              {0, 1, 1, -1, 3}});
  CHECK(oracle::max_abs_diff(r.omega, expected) < 1e-9);
  CHECK(std::abs(r.log_det_omega) < 1e-12);
  REQUIRE(r.materialized_cells.size() == 2);
  for (const FilledCell& c : r.materialized_cells) CHECK(std::abs(c.value) < 1e-15);
  CHECK(r.per_family_terms.size() == 5);
  CHECK(markov_determinant(g, d) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("closed-form inverse of a diagonal matrix") {
  const InverseReport r = markov_inverse(PartialMatrix::diagonal({2, 4, 8}), Dag(3, {}));
  CHECK(r.omega == SymMatrix::diagonal(std::vector<double>{0.5, 0.25, 0.125}));
  CHECK(markov_determinant(PartialMatrix::diagonal({2, 4, 8}), Dag(3, {})) == 1.0 / 64);
  CHECK(r.materialized_cells.empty());
}

TEST_CASE("closed-form determinant over the 5x5 pattern with unit diagonal") {
  // Family blocks: {1,2,4}, {2,5}, {3,4,5}; cells (4,2) and (5,4) are zero.
  const Dag d = load_dag("closed_form_inverse_5x5.dag");
  const double s12 = 0.3, s14 = 0.2, s25 = -0.4, s34 = 0.5, s35 = 0.1;
  PartialMatrix g = PartialMatrix::diagonal({1, 1, 1, 1, 1});
  g.specify(1, 2, s12);
  g.specify(1, 4, s14);
  g.specify(2, 5, s25);
  g.specify(3, 4, s34);
  g.specify(3, 5, s35);
  const double expected =
      1.0 / ((1 - s12 * s12 - s14 * s14) * (1 - s25 * s25) * (1 - s34 * s34 - s35 * s35));
  CHECK(markov_determinant(g, d) == Catch::Approx(expected).epsilon(1e-12));
  CHECK(markov_determinant_by_blocks(g, d) == Catch::Approx(expected).epsilon(1e-12));
}

TEST_CASE("closed-form inverse against full completion on random instances") {
  oracle::Rng rng(83);
  for (int t = 0; t < 100; ++t) {
    const Dag d = oracle::random_dag(rng, 1 + t % 10, 0.4);
    const auto s = oracle::random_ld_member(rng, d);
    const PartialMatrix g = oracle::restrict_to_dag(s.sigma, d);
    const PdCompletionResult full = complete_in_pd(g, d);
    REQUIRE(full.completed());
    const InverseReport r = markov_inverse(g, d);
    const SymMatrix direct =
        oracle::from_dense(oracle::gauss_jordan_inverse(oracle::to_dense(full.sigma)));
    CHECK(rel_frobenius(r.omega, direct) < 1e-8);

    const double det = markov_determinant(g, d);
    const double det_full = oracle::cofactor_determinant(oracle::to_dense(full.sigma));
    if (d.size() <= 8) CHECK(det * det_full == Catch::Approx(1.0).epsilon(1e-8));
    CHECK(markov_determinant_by_blocks(g, d) == Catch::Approx(det).epsilon(1e-10));
    CHECK(std::exp(r.log_det_omega) == Catch::Approx(determinant(r.omega)).epsilon(1e-8));
    if (is_perfect(d)) CHECK(r.materialized_cells.empty());
  }
}

TEST_CASE("closed-form inverse reports non-completable input") {
  const Dag d = load_dag("noncompletable_4x4.dag");
  try {
    markov_inverse(load_mat("noncompletable_4x4.mat"), d);
    FAIL("expected NotCompletable");
  } catch (const NotCompletable& e) {
    CHECK(e.vertex() == 1);
  }
}

TEST_CASE("separation split inverse") {
  const Dag d = load_dag("closed_form_inverse_5x5.dag");
  const SymMatrix sigma = restrict(load_mat("closed_form_inverse_5x5_sigma.mat"), {1, 2, 3, 4, 5});
  const SymMatrix direct = inverse(sigma);

  // A = V \ fa(1), B = {1}, S = pa(1).
  const SplitInverse s = separation_split_inverse(sigma, d, {3, 5}, {1}, {2, 4});
  CHECK(oracle::max_abs_diff(s.inverse, direct) < 1e-9);
  CHECK(s.det_inverse == Catch::Approx(1.0 / determinant(sigma)).epsilon(1e-9));

  const SplitInverse whole = separation_split_inverse(sigma, d, {1, 2, 3}, {}, {4, 5});
  CHECK(oracle::max_abs_diff(whole.inverse, direct) < 1e-9);

  CHECK_THROWS_AS(separation_split_inverse(sigma, d, {2, 3}, {1}, {4, 5}), NotSeparating);
  CHECK_THROWS_AS(separation_split_inverse(sigma, d, {3, 5}, {1}, {2}), OverlappingSets);
  CHECK_THROWS_AS(separation_split_inverse(SymMatrix::identity(5) + sigma, d, {3, 5}, {1}, {2, 4}),
                  NotInPdD);
}

TEST_CASE("separation split inverse of a block-diagonal matrix with empty separator") {
  const auto sigma = SymMatrix::from_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 4}});
  const Dag d(3, {{2, 1}});
  const SplitInverse s = separation_split_inverse(sigma, d, {1, 2}, {3}, {});
  CHECK(oracle::max_abs_diff(s.inverse, inverse(sigma)) < 1e-12);
  CHECK(s.det_inverse == Catch::Approx(1.0 / 12.0));
}

TEST_CASE("counterexample construction") {
  CHECK_THROWS_AS(counterexample_partial_matrix(Dag(3, {{3, 1}, {2, 1}}), 0.5), BadEpsilon);
  CHECK_THROWS_AS(counterexample_partial_matrix(Dag(3, {{3, 1}, {2, 1}}), 1.0), BadEpsilon);
  CHECK_THROWS_AS(counterexample_partial_matrix(Dag(3, {{2, 1}, {3, 2}}), 0.8), PerfectDag);

  const Dag c4(4, {{2, 1}, {3, 1}, {4, 2}, {4, 3}});
  const Counterexample ce = counterexample_partial_matrix(c4, 0.8);
  CHECK(ce.immorality == Immorality{3, 1, 2});
  CHECK(is_partial_positive_definite(ce.gamma, c4));
  const PdCompletionResult r = complete_in_pd(ce.gamma, c4);
  CHECK(r.failing_vertex == 1);
  const SymMatrix block = principal_submatrix(r.sigma, {1, 2, 3});
  CHECK(oracle::cofactor_determinant(oracle::to_dense(block)) ==
        Catch::Approx(1 - 2 * 0.8 * 0.8).margin(1e-12));

  const Dag fig(4, {{2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 3}});
  const Counterexample ce2 = counterexample_partial_matrix(fig, 0.9);
  CHECK(is_partial_positive_definite(ce2.gamma, fig));
  CHECK_FALSE(complete_in_pd(ce2.gamma, fig).completed());
}

TEST_CASE("counterexamples on random non-perfect DAGs") {
  oracle::Rng rng(89);
  for (int t = 0; t < 100; ++t) {
    const Dag d = oracle::random_non_perfect_dag(rng, 3 + t % 6, 0.4);
    const Counterexample ce = counterexample_partial_matrix(d, 0.8);
    CHECK(is_partial_positive_definite(ce.gamma, d));
    const PdCompletionResult r = complete_in_pd(ce.gamma, d);
    CHECK_FALSE(r.completed());
    CHECK(r.failing_vertex == ce.immorality.collider);
  }
}

TEST_CASE("C4 inequalities at (0.6, 0.9, 0.1, 0.9)") {
  const C4Report r = c4_inequalities(0.6, 0.9, 0.1, 0.9);
  CHECK(r.f == Catch::Approx(0.3324).margin(5e-5));
  CHECK(r.f1 == Catch::Approx(-0.0144).margin(1e-12));
  CHECK(r.f2 == Catch::Approx(-0.0809).margin(1e-12));
  CHECK(r.f3 == Catch::Approx(-0.0809).margin(1e-12));
  CHECK(r.f4 == Catch::Approx(-0.0144).margin(1e-12));
  CHECK(r.f5 == Catch::Approx(-0.17).margin(1e-12));
  CHECK(r.f6 == Catch::Approx(-0.17).margin(1e-12));
  CHECK(r.f5_branches[0] == Catch::Approx(0.18).margin(1e-12));
  CHECK(r.f6_branches[1] == Catch::Approx(0.18).margin(1e-12));
  CHECK(r.grone_completable);
  CHECK_FALSE(r.dag_completable_any);
}

TEST_CASE("C4 inequalities at the origin and out of range") {
  const C4Report r = c4_inequalities(0, 0, 0, 0);
  CHECK(r.f == 2);
  for (double f : r.fs()) CHECK(f == 1);
  CHECK_THROWS_AS(c4_inequalities(1.0, 0, 0, 0), OutOfRange);
  CHECK_THROWS_AS(c4_inequalities(0, -1.5, 0, 0), OutOfRange);
  CHECK_THROWS_AS(c4_inequalities(0, 0, NAN, 0), OutOfRange);
}

TEST_CASE("some C4 orientation completes iff some f_k is positive") {
  oracle::Rng rng(97);
  const auto orientations = enumerate_acyclic_orientations(c4_graph());
  REQUIRE(orientations.size() == 14);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const double a = oracle::uniform(rng, -0.95, 0.95), b = oracle::uniform(rng, -0.95, 0.95);
    const double c = oracle::uniform(rng, -0.95, 0.95), d = oracle::uniform(rng, -0.95, 0.95);
    const C4Report r = c4_inequalities(a, b, c, d);
    const auto fs = r.fs();
    if (std::abs(*std::max_element(fs.begin(), fs.end())) < 1e-6) continue;
    bool any = false;
    for (const Digraph& o : orientations)
      any = any || complete_under_orientation(c4_partial_matrix(a, b, c, d), o).completed();
    CHECK(any == r.dag_completable_any);
    ++checked;
  }
  CHECK(checked > 250);
}

TEST_CASE("f > 0 iff a positive definite completion exists on a grid") {
  const std::vector<double> vals{-0.9, -0.5, 0.0, 0.4, 0.8};
  for (double a : vals)
    for (double b : vals)
      for (double c : vals)
        for (double d : {-0.7, 0.3, 0.9}) {
          const C4Report r = c4_inequalities(a, b, c, d);
          if (std::abs(r.f) < 0.02) continue;
          CHECK(oracle::c4_grid_has_pd_completion(a, b, c, d, 0.02) == r.grone_completable);
        }
}

TEST_CASE("completion under a relabeled orientation maps back to the file labels") {
  // 1 -> 2 forces a relabel; sigma must still be indexed by the original labels.
  PartialMatrix g = PartialMatrix::diagonal({1, 2, 3});
  g.specify(1, 2, 0.5);
  g.specify(2, 3, 0.25);
  const PdCompletionResult r = complete_under_orientation(g, Digraph{3, {{1, 2}, {2, 3}}});
  REQUIRE(r.completed());
  CHECK(r.sigma(1, 2) == 0.5);
  CHECK(r.sigma(2, 3) == 0.25);
  CHECK(r.sigma(1, 3) == Catch::Approx(0.5 * 0.25 / 2.0));
}
