#include <catch_amalgamated.hpp>
#include <cmath>

#include "oracles.hpp"
#include "pdc/symlin.hpp"

using namespace pdc;

namespace {

double rel_frobenius(const SymMatrix& a, const SymMatrix& b) {
  return (a - b).frobenius_norm() / std::max(1.0, b.frobenius_norm());
}

}  // namespace

TEST_CASE("SymMatrix writes mirror") {
  SymMatrix m(3);
  m.set(3, 1, 2.5);
  CHECK(m(1, 3) == 2.5);
  m.add(1, 3, 1.0);
  CHECK(m(3, 1) == 3.5);
  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}, {3, 1}}), AsymmetricValue);
}

TEST_CASE("is_positive_definite on small examples") {
  CHECK(is_positive_definite(SymMatrix::identity(3)));
  CHECK_FALSE(is_positive_definite(SymMatrix::from_rows({{1, 0.9}, {0.9, 0.8}})));
  CHECK(is_positive_definite(SymMatrix{}));
  const double s42 = 896.0 / 37.0;
  const auto filled = SymMatrix::from_rows(
      {{7, 12, 12, 16}, {12, 30, 28, s42}, {12, 28, 37, 32}, {16, s42, 32, 38}});
  CHECK_FALSE(is_positive_definite(filled));
}

TEST_CASE("is_positive_definite agrees with Jacobi eigenvalue signs") {
  oracle::Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = 1 + trial % 6;
    const SymMatrix m = oracle::random_symmetric(rng, p);
    const auto ev = oracle::jacobi_eigenvalues(m);
    if (std::abs(ev.front()) < 1e-6) continue;
    CHECK(is_positive_definite(m) == (ev.front() > 0));
  }
}

TEST_CASE("modified Cholesky of the identity") {
  const LdlFactor f = modified_cholesky(SymMatrix::identity(4));
  CHECK(f.lower == Matrix::identity(4));
  CHECK(f.diag == std::vector<double>(4, 1.0));
}

TEST_CASE("modified Cholesky recovers the signed pivots of the worked 6x6 example") {
  const auto gamma_hat = SymMatrix::from_rows({{1, 0, 0, -3, 0, 4},
                                               {0, -1, -2, 0, -5, 2},
                                               {0, -2, -2, -10, -10, 4},
                                               {-3, 0, -10, 56, 3, -12},
                                               {0, -5, -10, 3, -30, 10},
                                               {4, 2, 4, -12, 10, 13}});
  const LdlFactor f = modified_cholesky(gamma_hat);
  const std::vector<double> lambda{1, -1, 2, -3, -2, 1};
  for (int j = 0; j < 6; ++j) CHECK(f.diag[j] == Catch::Approx(lambda[j]).margin(1e-12));
  const Matrix expected = Matrix::from_rows({{1, 0, 0, 0, 0, 0},
                                             {0, 1, 0, 0, 0, 0},
                                             {0, 2, 1, 0, 0, 0},
                                             {-3, 0, -5, 1, 0, 0},
                                             {0, 5, 0, -1, 1, 0},
                                             {4, -2, 0, 0, 0, 1}});
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) CHECK(f.lower(i, j) == Catch::Approx(expected(i, j)).margin(1e-12));
}

TEST_CASE("modified Cholesky reconstructs random matrices") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = 1 + trial % 8;
    const SymMatrix m = trial % 2 ? oracle::random_spd(rng, p) : oracle::random_symmetric(rng, p);
    LdlFactor f;
    try {
      f = modified_cholesky(m);
    } catch (const ZeroPivot&) {
      continue;
    }
    for (int i = 1; i <= p; ++i) {
      CHECK(f.lower(i, i) == 1.0);
      for (int j = i + 1; j <= p; ++j) CHECK(f.lower(i, j) == 0.0);
    }
    if (trial % 2) CHECK(rel_frobenius(f.reconstruct(), m) < 1e-12);
  }
}

TEST_CASE("modified Cholesky reports a vanishing pivot") {
  try {
    modified_cholesky(SymMatrix::from_rows({{1, 1, 0}, {1, 1, 2}, {0, 2, 3}}));
    FAIL("expected ZeroPivot");
  } catch (const ZeroPivot& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("Schur complement examples") {
  const auto m = SymMatrix::from_rows({{1, 0.4}, {0.4, 1}});
  CHECK(schur_complement(m, {1}, {2})(1, 1) == Catch::Approx(0.84).margin(1e-15));
  CHECK(schur_complement(m, {}, {1, 2}) == m);

  const auto block = SymMatrix::from_rows({{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 3, 1}, {0, 0, 1, 3}});
  CHECK(schur_complement(block, {1, 2}, {3, 4}) == principal_submatrix(block, {3, 4}));
  CHECK_THROWS_AS(schur_complement(SymMatrix::from_rows({{0, 1}, {1, 1}}), {1}, {2}),
                  SingularBlock);
}

TEST_CASE("Schur complements of PD matrices are PD") {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = 2 + trial % 6;
    const SymMatrix m = oracle::random_spd(rng, p);
    IndexSet i, j;
    for (int v = 1; v <= p; ++v) (oracle::uniform(rng, 0, 1) < 0.5 ? i : j).push_back(v);
    if (j.empty()) continue;
    CHECK(is_positive_definite(schur_complement(m, i, j)));
  }
}

TEST_CASE("inverse and determinant of the identity") {
  CHECK(inverse(SymMatrix::identity(3)) == SymMatrix::identity(3));
  CHECK(determinant(SymMatrix::identity(3)) == 1.0);
}

TEST_CASE("inverse of the closed-form 5x5 covariance is the integer matrix") {
  const auto sigma = SymMatrix::from_rows({{4, -2, 0, 1, 1},
                                           {-2, 2, 1, 0, -1},
                                           {0, 1, 3, 1, -1},
                                           {1, 0, 1, 1, 0},
                                           {1, -1, -1, 0, 1}});
  const auto expected = SymMatrix::from_rows({{1, 1, 0, -1, 0},
                                              {1, 2, 0, -1, 1},
                                              {0, 0, 1, -1, 1},
                                              {-1, -1, -1, 3, -1},
                                              {0, 1, 1, -1, 3}});
  CHECK(oracle::max_abs_diff(inverse(sigma), expected) < 1e-12);
  CHECK(determinant(sigma) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("inverse and determinant against independent oracles") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int p = 1 + trial % 5;
    const SymMatrix m = oracle::random_symmetric(rng, p);
    const double det_oracle = oracle::cofactor_determinant(oracle::to_dense(m));
    if (std::abs(det_oracle) < 1e-6) continue;
    CHECK(determinant(m) == Catch::Approx(det_oracle).epsilon(1e-9));
    const Matrix prod = m.to_matrix() * inverse(m).to_matrix();
    const double scale = m.inf_norm() * inverse(m).inf_norm();
    for (int i = 1; i <= p; ++i)
      for (int j = 1; j <= p; ++j)
        CHECK(std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)) < 1e-10 * std::max(1.0, scale));
  }
}

TEST_CASE("determinant equals the product of LDL pivots on SPD input") {
  oracle::Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const SymMatrix m = oracle::random_spd(rng, 1 + trial % 7);
    const LdlFactor f = modified_cholesky(m);
    double prod = 1.0;
    for (double d : f.diag) prod *= d;
    CHECK(determinant(m) == Catch::Approx(prod).epsilon(1e-10));
    CHECK(log_determinant_pd(m) == Catch::Approx(std::log(prod)).epsilon(1e-10));
  }
}

TEST_CASE("singular input is reported") {
  const auto s = SymMatrix::from_rows({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse(s), SingularMatrix);
  CHECK_THROWS_AS(cholesky(s), ZeroPivot);
}

TEST_CASE("submatrix and permute") {
  const auto m = SymMatrix::from_rows({{1, 2, 3}, {2, 4, 5}, {3, 5, 6}});
  const Matrix s = submatrix(m, {1, 3}, {2});
  CHECK(s.rows() == 2);
  CHECK(s(1, 1) == 2);
  CHECK(s(2, 1) == 5);
  const std::vector<int> swap{3, 2, 1};
  const SymMatrix q = permute(m, swap);
  CHECK(q(1, 1) == 6);
  CHECK(q(3, 2) == 2);
  CHECK(permute(q, swap) == m);
}

TEST_CASE("solvers agree") {
  oracle::Rng rng(31);
  const SymMatrix m = oracle::random_spd(rng, 5);
  Matrix b(5, 2);
  for (int i = 1; i <= 5; ++i) {
    b(i, 1) = i;
    b(i, 2) = -2.0 * i + 1;
  }
  const Matrix x1 = cholesky_solve(cholesky(m), b);
  const Matrix x2 = ldl_solve(modified_cholesky(m), b);
  const Matrix x3 = lu_solve(m.to_matrix(), b);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 2; ++j) {
      CHECK(x1(i, j) == Catch::Approx(x3(i, j)).epsilon(1e-10));
      CHECK(x2(i, j) == Catch::Approx(x3(i, j)).epsilon(1e-10));
    }
}
