#ifndef PDC_ANALYTICS_HPP_
#define PDC_ANALYTICS_HPP_

#include <array>
#include <vector>

#include "pdc/completion.hpp"
#include "pdc/graph.hpp"
#include "pdc/partial.hpp"
#include "pdc/symlin.hpp"

namespace pdc {

// One summand of the family decomposition of the inverse.
struct FamilyTerm {
  int vertex;
  VertexSet family;
  VertexSet parents;
  // Sigma_{ii | pa(i)}, the Schur complement of the parent block.
  double conditional_variance;
};

struct InverseReport {
  SymMatrix omega;  // Sigma^{-1}
  double log_det_omega = 0.0;
  std::vector<FamilyTerm> per_family_terms;
  // Cells outside gamma's pattern that had to be computed. Empty for a
  // perfect DAG.
  std::vector<FilledCell> materialized_cells;
};

// Sigma^{-1} as the sum over i of [Sigma_{fa(i)}^{-1}]^V - [Sigma_{pa(i)}^{-1}]^V.
// Family blocks are materialized through the immorality closure only; the
// full completion is never formed. Throws NotCompletable(j) when a parent or
// family block is not positive definite, PatternMismatch.
InverseReport markov_inverse(const PartialMatrix& gamma, const Dag& d,
                             double tol = kDefaultPdTolerance);

// det(Sigma^{-1}) = prod_i 1 / Sigma_{ii | pa(i)}.
double markov_determinant(const PartialMatrix& gamma, const Dag& d,
                          double tol = kDefaultPdTolerance);

// det(Sigma^{-1}) = prod_i det(Sigma_{pa(i)}) / prod_i det(Sigma_{fa(i)}).
double markov_determinant_by_blocks(const PartialMatrix& gamma, const Dag& d,
                                    double tol = kDefaultPdTolerance);

struct SplitInverse {
  SymMatrix inverse;
  double det_inverse = 0.0;
};

// Sigma^{-1} = [Sigma_{A+S}^{-1}]^V + [Sigma_{B+S}^{-1}]^V - [Sigma_S^{-1}]^V for
// a partition (A, B, S) of the vertices where S separates A from B in the
// moral graph. Throws OverlappingSets (not a partition), NotSeparating,
// NotInPdD (Markov residual above tol * ||Sigma||_inf or not PD).
SplitInverse separation_split_inverse(const SymMatrix& sigma, const Dag& d, const VertexSet& a,
                                      const VertexSet& b, const VertexSet& s,
                                      double tol = 1e-8);

struct Counterexample {
  PartialMatrix gamma;
  Immorality immorality;  // high -> collider <- low used for the construction
};

// A partial positive definite matrix over a non-perfect d that has no
// completion in PD_D. Uses the immorality with the lowest collider v (ties:
// smallest (high, low)); unit diagonal, epsilon at (v, low) and (high, v),
// zero on the rest of the pattern. Throws PerfectDag, BadEpsilon unless
// sqrt(2)/2 < epsilon < 1.
Counterexample counterexample_partial_matrix(const Dag& d, double epsilon);

// C4 on 1-2-4-3-1 with Gamma_12 = a, Gamma_24 = b, Gamma_34 = c, Gamma_13 = d.
struct C4Report {
  double f = 0.0;
  double f1 = 0.0, f2 = 0.0, f3 = 0.0, f4 = 0.0, f5 = 0.0, f6 = 0.0;
  std::array<double, 2> f5_branches{};
  std::array<double, 2> f6_branches{};
  bool grone_completable = false;    // f > 0
  bool dag_completable_any = false;  // max(f1..f6) > 0

  std::array<double, 6> fs() const { return {f1, f2, f3, f4, f5, f6}; }
};

// Throws OutOfRange unless every argument lies in (-1, 1).
C4Report c4_inequalities(double a, double b, double c, double d);

UGraph c4_graph();
PartialMatrix c4_partial_matrix(double a, double b, double c, double d);

// Relabels an acyclic orientation to the ordering convention, permutes gamma
// to match and runs complete_in_pd. Sigma is returned in the original labels.
PdCompletionResult complete_under_orientation(const PartialMatrix& gamma, const Digraph& g,
                                              PdOptions options = {});

}  // namespace pdc

#endif  // PDC_ANALYTICS_HPP_
