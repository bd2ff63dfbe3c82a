#ifndef PDC_PARTIAL_HPP_
#define PDC_PARTIAL_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdc/graph.hpp"
#include "pdc/symlin.hpp"

namespace pdc {

using Cell = std::optional<double>;

// Symmetric p x p array whose cells are either specified reals or
// unspecified. Every diagonal cell is specified and (i, j) is specified iff
// (j, i) is, with the same value.
class PartialMatrix {
 public:
  PartialMatrix() = default;
  // Throws AsymmetricValue, UnspecifiedDiagonal or DimensionMismatch.
  static PartialMatrix from_rows(const std::vector<std::vector<Cell>>& rows);
  // Diagonal-only partial matrix.
  static PartialMatrix diagonal(const std::vector<double>& values);
  // Specifies every cell of `m`'s pattern restricted to `pattern` (plus the
  // diagonal).
  static PartialMatrix restrict_to_pattern(const SymMatrix& m, const UGraph& pattern);

  int dim() const { return p_; }
  bool is_specified(int i, int j) const;
  // Throws UnspecifiedCell.
  double value(int i, int j) const;
  Cell get(int i, int j) const;
  // Marks (i, j) and (j, i) specified with `v`.
  void specify(int i, int j, double v);

  // Specified off-diagonal positions as an undirected graph.
  UGraph pattern() const;
  std::size_t specified_count() const;

  friend bool operator==(const PartialMatrix&, const PartialMatrix&) = default;

 private:
  explicit PartialMatrix(int p);
  std::size_t offset(int i, int j) const;
  void check(int i, int j) const;

  int p_ = 0;
  std::vector<double> values_;
  std::vector<char> specified_;
};

// Builds a D-partial matrix from values keyed by (i, j) in either order.
// The keys must cover exactly the skeleton of d plus the diagonal
// (PatternMismatch otherwise); a pair given in both orders must agree
// (AsymmetricValue).
PartialMatrix from_dag_pattern(const Dag& d, const std::map<Position, double>& values);

// Throws PatternMismatch unless gamma's specified off-diagonal positions are
// exactly the skeleton edges of d.
void check_pattern(const PartialMatrix& gamma, const Dag& d);
void check_pattern(const PartialMatrix& gamma, const UGraph& g);

// Dense |C| x |C| matrix (Gamma_ij), i, j in C. Throws UnspecifiedCell.
SymMatrix restrict(const PartialMatrix& gamma, const VertexSet& c);

// First maximal clique of d's skeleton on which gamma is not positive
// definite, or nullopt when gamma is partial positive definite.
std::optional<VertexSet> find_non_pd_clique(const PartialMatrix& gamma, const UGraph& skeleton,
                                            double tol = kDefaultPdTolerance);

// Membership in Q_D: restrict(gamma, C) is positive definite for every
// maximal clique C of the skeleton of d.
bool is_partial_positive_definite(const PartialMatrix& gamma, const Dag& d,
                                  double tol = kDefaultPdTolerance);
bool is_partial_positive_definite(const PartialMatrix& gamma, const UGraph& g,
                                  double tol = kDefaultPdTolerance);

// p x p matrix equal to m on w x w (w sorted, 1-based) and zero elsewhere.
SymMatrix zero_fill_in(const SymMatrix& m, const VertexSet& w, int p);

PartialMatrix permute(const PartialMatrix& gamma, const std::vector<int>& new_label);

// Matrix file format: p lines of p whitespace-separated tokens; a token is a
// decimal real or '*' / '?' for an unspecified cell. Blank lines and lines
// starting with '#' are skipped.
PartialMatrix parse_partial_matrix(const std::string& text);
PartialMatrix read_partial_matrix_file(const std::string& path);
// Shortest round-trip decimal for each specified value, '*' otherwise.
std::string serialize(const PartialMatrix& gamma);

}  // namespace pdc

#endif  // PDC_PARTIAL_HPP_
