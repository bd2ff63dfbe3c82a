#include "pdc/completion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdc/kernels.hpp"

namespace pdc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double lambda_scale(const PartialMatrix& gamma) {
  double scale = 0.0;
  for (int i = 1; i <= gamma.dim(); ++i) scale = std::max(scale, std::abs(gamma.value(i, i)));
  return scale > 0.0 ? scale : 1.0;
}

std::span<const double> head(std::span<const double> row, int count) {
  return row.first(static_cast<std::size_t>(count));
}

// Solves Sigma_{pa} x = Sigma_{pa, j}. Positive definite blocks go through
// Cholesky; anything else (reachable only in diagnose mode) through pivoted
// LU. Returns an empty vector when the block is singular.
std::vector<double> solve_parent_system(const SymMatrix& sigma, const VertexSet& pa, int j) {
  const SymMatrix block = principal_submatrix(sigma, pa);
  const Matrix rhs = submatrix(sigma, pa, {j});
  Matrix x;
  try {
    x = cholesky_solve(cholesky(block), rhs);
  } catch (const ZeroPivot&) {
    try {
      x = lu_solve(block.to_matrix(), rhs);
    } catch (const SingularMatrix&) {
      return {};
    }
  }
  std::vector<double> out(pa.size());
  for (std::size_t k = 0; k < pa.size(); ++k) out[k] = x(static_cast<int>(k) + 1, 1);
  return out;
}

// Sigma_{i, pa} . x
double row_times(const SymMatrix& sigma, int i, const VertexSet& pa,
                 const std::vector<double>& x) {
  std::vector<double> row(pa.size());
  for (std::size_t k = 0; k < pa.size(); ++k) row[k] = sigma(i, pa[k]);
  return kernels::dot(row, x);
}

// Shared layer loop of the general and perfect-DAG procedures.
PdCompletionResult run_layers(const PartialMatrix& gamma, const Dag& d, bool check_families,
                              PdOptions options) {
  const int p = d.size();
  PdCompletionResult result;
  result.sigma = SymMatrix(p, kNaN);
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= i; ++j)
      if (const Cell c = gamma.get(i, j)) result.sigma.set(i, j, *c);

  for (int j = p; j >= 1; --j) {
    if (check_families &&
        !is_positive_definite(principal_submatrix(result.sigma, d.family(j)), options.tol)) {
      if (result.failing_vertex == 0) {
        result.status = PdStatus::kFamilyNotPd;
        result.failing_vertex = j;
      }
      result.failing_vertices.push_back(j);
      if (!options.diagnose) return result;
    }
    const VertexSet pr = d.predecessors(j);
    if (pr.empty()) continue;
    const VertexSet& pa = d.parents(j);
    if (pa.empty()) {
      for (int i : pr) result.sigma.set(i, j, 0.0);
      continue;
    }
    const std::vector<double> x = solve_parent_system(result.sigma, pa, j);
    for (int i : pr) result.sigma.set(i, j, x.empty() ? kNaN : row_times(result.sigma, i, pa, x));
  }
  return result;
}

}  // namespace

// ------------------------------------------------------------------- P_D

PCompletionResult complete_in_p(const PartialMatrix& gamma, const Dag& d, PMode mode) {
  check_pattern(gamma, d);
  const int p = d.size();
  const double threshold = kPositiveLambda * lambda_scale(gamma);

  PCompletionResult result;
  result.factor = LdlFactor{Matrix::identity(p), std::vector<double>(p, 0.0)};
  Matrix& lower = result.factor.lower;
  std::vector<double>& lambda = result.factor.diag;

  for (int j = 1; j <= p; ++j) {
    const auto lam = std::span<const double>(lambda).first(static_cast<std::size_t>(j - 1));
    const double ljj = gamma.value(j, j) -
                       kernels::weighted_dot(lam, head(lower.row(j), j - 1), head(lower.row(j), j - 1));
    lambda[j - 1] = ljj;
    if (!(ljj > threshold) && result.first_nonpositive == 0) {
      result.first_nonpositive = j;
      if (mode == PMode::kVerdictOnly) return result;
    }
    const VertexSet& pa = d.parents(j);
    if (pa.empty()) continue;
    if (!(std::abs(ljj) > threshold)) throw ZeroPivot(j);
    for (int i : pa) {
      const double s =
          kernels::weighted_dot(lam, head(lower.row(i), j - 1), head(lower.row(j), j - 1));
      lower(i, j) = (gamma.value(i, j) - s) / ljj;
    }
  }
  result.in_p_d = result.first_nonpositive == 0;
  result.completed = result.factor.reconstruct();
  return result;
}

// ------------------------------------------------------------------ PD_D

PdCompletionResult complete_in_pd(const PartialMatrix& gamma, const Dag& d, PdOptions options) {
  check_pattern(gamma, d);
  return run_layers(gamma, d, /*check_families=*/true, options);
}

SymMatrix complete_in_pd_perfect(const PartialMatrix& gamma, const Dag& d, double tol) {
  check_pattern(gamma, d);
  if (!is_perfect(d)) throw NotPerfect();
  if (auto clique = find_non_pd_clique(gamma, undirected_version(d), tol))
    throw NotPartialPd(*clique);
  return run_layers(gamma, d, /*check_families=*/false, PdOptions{tol, false}).sigma;
}

ClosureFill fill_closure_cells(const PartialMatrix& gamma, const Dag& d, double tol) {
  check_pattern(gamma, d);
  ClosureFill out{immorality_closure(d), gamma, {}};
  const Dag& closed = out.closure.back();
  const int p = d.size();

  for (int j = p; j >= 1; --j) {
    VertexSet added;
    for (int i : closed.parents(j))
      if (!d.has_edge(i, j)) added.push_back(i);
    if (added.empty()) continue;

    const VertexSet& pa = d.parents(j);
    if (pa.empty()) {
      for (int i : added) {
        out.gamma_closed.specify(i, j, 0.0);
        out.filled.push_back({i, j, 0.0});
      }
      continue;
    }
    const SymMatrix block = restrict(out.gamma_closed, pa);
    if (!is_positive_definite(block, tol)) throw NotCompletable(j);
    Matrix rhs(static_cast<int>(pa.size()), 1);
    for (std::size_t k = 0; k < pa.size(); ++k)
      rhs(static_cast<int>(k) + 1, 1) = gamma.value(pa[k], j);
    const Matrix x = cholesky_solve(cholesky(block), rhs);
    for (int i : added) {
      double v = 0.0;
      std::vector<double> row(pa.size());
      std::vector<double> coef(pa.size());
      for (std::size_t k = 0; k < pa.size(); ++k) {
        row[k] = out.gamma_closed.value(i, pa[k]);
        coef[k] = x(static_cast<int>(k) + 1, 1);
      }
      v = kernels::dot(row, coef);
      out.gamma_closed.specify(i, j, v);
      out.filled.push_back({i, j, v});
    }
  }
  return out;
}

ClosureCompletion complete_via_immorality_closure(const PartialMatrix& gamma, const Dag& d,
                                                  double tol) {
  ClosureFill fill = fill_closure_cells(gamma, d, tol);
  const Dag& closed = fill.closure.back();
  if (auto clique = find_non_pd_clique(fill.gamma_closed, undirected_version(closed), tol))
    throw NotCompletable(0, *clique);
  SymMatrix sigma = complete_in_pd_perfect(fill.gamma_closed, closed, tol);
  return ClosureCompletion{std::move(fill.closure), std::move(fill.gamma_closed),
                           std::move(fill.filled), std::move(sigma)};
}

// ------------------------------------------------------------- verifiers

double max_markov_residual(const SymMatrix& sigma, const Dag& d) {
  if (sigma.dim() != d.size()) throw DimensionMismatch("matrix and DAG sizes differ");
  double worst = 0.0;
  for (int j = 1; j <= d.size(); ++j) {
    const VertexSet pr = d.predecessors(j);
    if (pr.empty()) continue;
    const VertexSet& pa = d.parents(j);
    std::vector<double> x;
    if (!pa.empty()) {
      try {
        const Matrix sol = lu_solve(principal_submatrix(sigma, pa).to_matrix(),
                                    submatrix(sigma, pa, {j}));
        for (int k = 1; k <= sol.rows(); ++k) x.push_back(sol(k, 1));
      } catch (const SingularMatrix&) {
        return std::numeric_limits<double>::infinity();
      }
    }
    for (int i : pr) {
      const double predicted = pa.empty() ? 0.0 : row_times(sigma, i, pa, x);
      worst = std::max(worst, std::abs(sigma(i, j) - predicted));
    }
  }
  return worst;
}

bool verify_in_pd(const SymMatrix& sigma, const Dag& d, double tol) {
  if (!is_positive_definite(sigma)) return false;
  return max_markov_residual(sigma, d) <= tol * sigma.inf_norm();
}

double max_off_pattern_factor(const LdlFactor& f, const Dag& d) {
  double worst = 0.0;
  for (int i = 1; i <= f.dim(); ++i)
    for (int j = 1; j < i; ++j)
      if (!d.has_edge(i, j)) worst = std::max(worst, std::abs(f.lower(i, j)));
  return worst;
}

bool verify_in_p(const SymMatrix& omega, const Dag& d, double tol) {
  if (omega.dim() != d.size()) throw DimensionMismatch("matrix and DAG sizes differ");
  LdlFactor f;
  try {
    f = modified_cholesky(omega);
  } catch (const ZeroPivot&) {
    return false;
  }
  const double threshold = kPositiveLambda * std::max(omega.max_abs_diagonal(), 1e-300);
  for (double lam : f.diag)
    if (!(lam > threshold)) return false;
  return max_off_pattern_factor(f, d) <= tol;
}

}  // namespace pdc
