#include "pdc/analytics.hpp"

#include <algorithm>
#include <cmath>

namespace pdc {

namespace {

// Closure fill plus the family-block check for every vertex.
ClosureFill materialize_families(const PartialMatrix& gamma, const Dag& d, double tol) {
  ClosureFill fill = fill_closure_cells(gamma, d, tol);
  for (int j = d.size(); j >= 1; --j) {
    if (!is_positive_definite(restrict(fill.gamma_closed, d.family(j)), tol))
      throw NotCompletable(j);
  }
  return fill;
}

// Sigma_{ii | pa(i)} from the family block with i in position `pos`.
double conditional_variance(const SymMatrix& fam, int pos) {
  const int n = fam.dim();
  IndexSet rest;
  for (int k = 1; k <= n; ++k)
    if (k != pos) rest.push_back(k);
  return schur_complement(fam, rest, {pos})(1, 1);
}

void add_zero_filled_inverse(SymMatrix& out, const SymMatrix& block, const VertexSet& w,
                             double sign) {
  if (w.empty()) return;
  const SymMatrix inv = inverse(block);
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b)
      out.add(w[a], w[b], sign * inv(static_cast<int>(a) + 1, static_cast<int>(b) + 1));
}

double det_or_one(const SymMatrix& m) { return m.empty() ? 1.0 : determinant(m); }

}  // namespace

InverseReport markov_inverse(const PartialMatrix& gamma, const Dag& d, double tol) {
  const ClosureFill fill = materialize_families(gamma, d, tol);
  const int p = d.size();
  InverseReport report;
  report.omega = SymMatrix(p);
  report.materialized_cells = fill.filled;

  for (int i = 1; i <= p; ++i) {
    const VertexSet fa = d.family(i);
    const VertexSet& pa = d.parents(i);
    const SymMatrix fam = restrict(fill.gamma_closed, fa);
    const int pos = static_cast<int>(std::find(fa.begin(), fa.end(), i) - fa.begin()) + 1;
    const double cv = conditional_variance(fam, pos);
    add_zero_filled_inverse(report.omega, fam, fa, 1.0);
    add_zero_filled_inverse(report.omega, restrict(fill.gamma_closed, pa), pa, -1.0);
    report.log_det_omega -= std::log(cv);
    report.per_family_terms.push_back({i, fa, pa, cv});
  }
  return report;
}

double markov_determinant(const PartialMatrix& gamma, const Dag& d, double tol) {
  const ClosureFill fill = materialize_families(gamma, d, tol);
  double det = 1.0;
  for (int i = 1; i <= d.size(); ++i) {
    const VertexSet fa = d.family(i);
    const int pos = static_cast<int>(std::find(fa.begin(), fa.end(), i) - fa.begin()) + 1;
    det /= conditional_variance(restrict(fill.gamma_closed, fa), pos);
  }
  return det;
}

double markov_determinant_by_blocks(const PartialMatrix& gamma, const Dag& d, double tol) {
  const ClosureFill fill = materialize_families(gamma, d, tol);
  double num = 1.0;
  double den = 1.0;
  for (int i = 1; i <= d.size(); ++i) {
    num *= det_or_one(restrict(fill.gamma_closed, d.parents(i)));
    den *= det_or_one(restrict(fill.gamma_closed, d.family(i)));
  }
  return num / den;
}

SplitInverse separation_split_inverse(const SymMatrix& sigma, const Dag& d, const VertexSet& a,
                                      const VertexSet& b, const VertexSet& s, double tol) {
  const int p = d.size();
  if (sigma.dim() != p) throw DimensionMismatch("matrix and DAG sizes differ");
  if (a.size() + b.size() + s.size() != static_cast<std::size_t>(p))
    throw OverlappingSets("A, B and S must partition the vertices");
  if (!separates(moral_graph(d), a, b, s)) throw NotSeparating("S does not separate A from B");
  if (!verify_in_pd(sigma, d, tol)) throw NotInPdD();

  VertexSet as;
  VertexSet bs;
  std::set_union(a.begin(), a.end(), s.begin(), s.end(), std::back_inserter(as));
  std::set_union(b.begin(), b.end(), s.begin(), s.end(), std::back_inserter(bs));

  SplitInverse out{SymMatrix(p), 0.0};
  const SymMatrix sas = principal_submatrix(sigma, as);
  const SymMatrix sbs = principal_submatrix(sigma, bs);
  const SymMatrix ss = principal_submatrix(sigma, s);
  add_zero_filled_inverse(out.inverse, sas, as, 1.0);
  add_zero_filled_inverse(out.inverse, sbs, bs, 1.0);
  add_zero_filled_inverse(out.inverse, ss, s, -1.0);
  out.det_inverse = det_or_one(ss) / (det_or_one(sas) * det_or_one(sbs));
  return out;
}

Counterexample counterexample_partial_matrix(const Dag& d, double epsilon) {
  if (!(epsilon > std::sqrt(2.0) / 2.0 && epsilon < 1.0)) throw BadEpsilon(epsilon);
  const std::vector<Immorality> imm = immoralities(d);
  if (imm.empty()) throw PerfectDag();
  const Immorality chosen = imm.front();

  PartialMatrix gamma = PartialMatrix::diagonal(std::vector<double>(d.size(), 1.0));
  for (auto [i, j] : d.edges()) gamma.specify(i, j, 0.0);
  gamma.specify(chosen.low, chosen.collider, epsilon);
  gamma.specify(chosen.high, chosen.collider, epsilon);
  return {gamma, chosen};
}

C4Report c4_inequalities(double a, double b, double c, double d) {
  for (double x : {a, b, c, d})
    if (!(std::abs(x) < 1.0)) throw OutOfRange("C4 entries must lie in (-1, 1)");
  const double a2 = 1 - a * a;
  const double b2 = 1 - b * b;
  const double c2 = 1 - c * c;
  const double d2 = 1 - d * d;
  C4Report r;
  r.f = std::sqrt(a2 * b2) + std::sqrt(c2 * d2) - std::abs(a * b - c * d);
  r.f1 = c2 * d2 - (a * b - c * d) * (a * b - c * d);
  r.f2 = a2 * d2 - (b * c - a * d) * (b * c - a * d);
  r.f3 = a2 * b2 - (c * d - a * b) * (c * d - a * b);
  r.f4 = b2 * c2 - (a * d - b * c) * (a * d - b * c);
  r.f5_branches = {b2 * c2 - (b * c) * (b * c), a2 * d2 - (a * d) * (a * d)};
  r.f6_branches = {a2 * b2 - (a * b) * (a * b), c2 * d2 - (c * d) * (c * d)};
  r.f5 = std::min(r.f5_branches[0], r.f5_branches[1]);
  r.f6 = std::min(r.f6_branches[0], r.f6_branches[1]);
  r.grone_completable = r.f > 0;
  const auto fs = r.fs();
  r.dag_completable_any = *std::max_element(fs.begin(), fs.end()) > 0;
  return r;
}

UGraph c4_graph() { return UGraph(4, {{2, 1}, {3, 1}, {4, 2}, {4, 3}}); }

PartialMatrix c4_partial_matrix(double a, double b, double c, double d) {
  PartialMatrix gamma = PartialMatrix::diagonal({1.0, 1.0, 1.0, 1.0});
  gamma.specify(1, 2, a);
  gamma.specify(2, 4, b);
  gamma.specify(3, 4, c);
  gamma.specify(1, 3, d);
  return gamma;
}

PdCompletionResult complete_under_orientation(const PartialMatrix& gamma, const Digraph& g,
                                              PdOptions options) {
  const Relabeling r = topological_relabel(g);
  PdCompletionResult result = complete_in_pd(permute(gamma, r.new_label), r.dag, options);
  const std::vector<int> old_label = invert_permutation(r.new_label);
  result.sigma = permute(result.sigma, old_label);
  if (result.failing_vertex != 0) result.failing_vertex = old_label[result.failing_vertex - 1];
  for (int& v : result.failing_vertices) v = old_label[v - 1];
  return result;
}

}  // namespace pdc
