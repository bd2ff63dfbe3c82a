#ifndef PDC_COMPLETION_HPP_
#define PDC_COMPLETION_HPP_

#include <vector>

#include "pdc/graph.hpp"
#include "pdc/partial.hpp"
#include "pdc/symlin.hpp"

// Completion of D-partial matrices in P_D (inverse covariances of the DAG
// model, characterized by L Lambda L^T with L supported on D's edges) and in
// PD_D (covariances satisfying the directed Markov equations).
namespace pdc {

// ------------------------------------------------------------------- P_D

enum class PMode {
  kFull,
  // Stop at the first non-positive Lambda_jj; `completed` is left empty.
  kVerdictOnly,
};

struct PCompletionResult {
  LdlFactor factor;
  // L diag(Lambda) L^T; empty when a verdict-only run stopped early.
  SymMatrix completed;
  bool in_p_d = false;
  // First j with Lambda_jj not strictly positive, 0 when none.
  int first_nonpositive = 0;
};

// Lambda_jj > kPositiveLambda * max_i |Gamma_ii| counts as strictly positive.
inline constexpr double kPositiveLambda = 1e-12;

// Column-by-column modified Cholesky construction of the unique L in L_D and
// diagonal Lambda with L Lambda L^T agreeing with gamma on its pattern.
// Throws PatternMismatch, or ZeroPivot(j) when Lambda_jj vanishes at a column
// that still has parents to fill.
PCompletionResult complete_in_p(const PartialMatrix& gamma, const Dag& d,
                                PMode mode = PMode::kFull);

// ------------------------------------------------------------------ PD_D

enum class PdStatus { kCompleted, kFamilyNotPd };

struct PdCompletionResult {
  // Completed matrix on success. On failure, the cells filled so far; cells
  // that were never determined hold NaN.
  SymMatrix sigma;
  PdStatus status = PdStatus::kCompleted;
  // First (highest) vertex whose family block failed the positive definite
  // check, 0 on success.
  int failing_vertex = 0;
  // Every failing vertex, in processing order. Only populated past the first
  // entry in diagnose mode.
  std::vector<int> failing_vertices;

  bool completed() const { return status == PdStatus::kCompleted; }
};

struct PdOptions {
  double tol = kDefaultPdTolerance;
  // Keep processing layers after a failure to report every failing vertex.
  bool diagnose = false;
};

// Layer-by-layer completion for j = p, p-1, ..., 1: check that the family
// block is positive definite, then set
//   Sigma_{pr(j), j} = Sigma_{pr(j), pa(j)} Sigma_{pa(j)}^{-1} Sigma_{pa(j), j}
// (zero when pa(j) is empty). The family of vertex p is {p}, so its check is
// Gamma_pp > 0. Throws PatternMismatch.
PdCompletionResult complete_in_pd(const PartialMatrix& gamma, const Dag& d,
                                  PdOptions options = {});

// Same arithmetic as complete_in_pd without the per-layer checks; valid for
// perfect DAGs and gamma in Q_D. Throws NotPerfect, NotPartialPd,
// PatternMismatch.
SymMatrix complete_in_pd_perfect(const PartialMatrix& gamma, const Dag& d,
                                 double tol = kDefaultPdTolerance);

// A cell filled through the Markov equations because its edge was added by
// the immorality closure.
struct FilledCell {
  int row;  // higher label
  int col;  // lower label
  double value;

  friend bool operator==(const FilledCell&, const FilledCell&) = default;
};

struct ClosureFill {
  std::vector<Dag> closure;    // D(0) .. D(n)
  PartialMatrix gamma_closed;  // partial matrix over D(n)
  std::vector<FilledCell> filled;
};

// Walks the closure edges of d from the highest column down and computes each
// added cell from the Markov equation of its lower endpoint over d. Throws
// NotCompletable(j) when Sigma_{pa(j)} is not positive definite where it is
// needed, and PatternMismatch.
ClosureFill fill_closure_cells(const PartialMatrix& gamma, const Dag& d,
                               double tol = kDefaultPdTolerance);

struct ClosureCompletion {
  std::vector<Dag> closure;
  PartialMatrix gamma_closed;
  std::vector<FilledCell> filled;
  SymMatrix sigma;
};

// Completion through the immorality closure: fill the added cells, check the
// closed matrix is in Q_{D(n)}, then complete over the perfect D(n). Throws
// NotCompletable.
ClosureCompletion complete_via_immorality_closure(const PartialMatrix& gamma, const Dag& d,
                                                  double tol = kDefaultPdTolerance);

// Largest |Sigma_{pr(j),j} - Sigma_{pr(j),pa(j)} Sigma_{pa(j)}^{-1} Sigma_{pa(j),j}|
// over all j. Infinite when some parent block is singular.
double max_markov_residual(const SymMatrix& sigma, const Dag& d);

// Sigma is positive definite and every Markov residual is at most
// tol * ||Sigma||_inf.
bool verify_in_pd(const SymMatrix& sigma, const Dag& d, double tol);

// The modified Cholesky factor of omega exists, has positive pivots, and
// |L_ij| <= tol for every i > j with (i, j) not an edge of d.
bool verify_in_p(const SymMatrix& omega, const Dag& d, double tol);

// Largest |L_ij| over i > j with (i, j) not an edge of d.
double max_off_pattern_factor(const LdlFactor& f, const Dag& d);

}  // namespace pdc

#endif  // PDC_COMPLETION_HPP_
