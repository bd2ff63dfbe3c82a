#ifndef PDC_ERRORS_HPP_
#define PDC_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdc {

// Base class for every error raised by the library. Negative verdicts
// (a matrix that cannot be completed, a graph that is not perfect) are
// reported through result values, except where noted on the operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pivot of an LDL^T or Cholesky elimination vanished. `index` is 1-based.
class ZeroPivot : public Error {
 public:
  explicit ZeroPivot(int index);
  int index() const { return index_; }

 private:
  int index_;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// The block M_I of a Schur complement could not be inverted.
class SingularBlock : public SingularMatrix {
 public:
  using SingularMatrix::SingularMatrix;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class CycleDetected : public GraphError {
 public:
  explicit CycleDetected(std::vector<int> cycle);
  // Vertices of a directed cycle, in order; the last vertex points back to
  // the first.
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

class NotDecomposable : public GraphError {
 public:
  NotDecomposable() : GraphError("graph is not decomposable (chordal)") {}
};

class NotPerfect : public GraphError {
 public:
  NotPerfect() : GraphError("DAG is not perfect") {}
};

// The DAG has no immorality, so every partial positive definite matrix over
// it is completable and no counterexample exists.
class PerfectDag : public GraphError {
 public:
  PerfectDag() : GraphError("graph is perfect; always completable") {}
};

class OverlappingSets : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotSeparating : public GraphError {
 public:
  using GraphError::GraphError;
};

using Position = std::pair<int, int>;

// A partial matrix does not carry the pattern induced by a graph.
class PatternMismatch : public Error {
 public:
  PatternMismatch(std::vector<Position> missing, std::vector<Position> extra);
  // Skeleton positions (i > j) that are unspecified in the matrix.
  const std::vector<Position>& missing() const { return missing_; }
  // Specified positions (i > j) that are not skeleton edges.
  const std::vector<Position>& extra() const { return extra_; }

 private:
  std::vector<Position> missing_;
  std::vector<Position> extra_;
};

class AsymmetricValue : public Error {
 public:
  AsymmetricValue(int row, int col);
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

class UnspecifiedCell : public Error {
 public:
  UnspecifiedCell(int row, int col);
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

class UnspecifiedDiagonal : public Error {
 public:
  explicit UnspecifiedDiagonal(int index);
  int index() const { return index_; }

 private:
  int index_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class NotPartialPd : public Error {
 public:
  explicit NotPartialPd(std::vector<int> clique);
  const std::vector<int>& clique() const { return clique_; }

 private:
  std::vector<int> clique_;
};

// No completion in PD_D exists. `vertex` is the 1-based vertex whose
// parent/family block failed, or 0 when the failure was detected by the
// partial positive definiteness check over the closed DAG (see `clique`).
class NotCompletable : public Error {
 public:
  explicit NotCompletable(int vertex);
  NotCompletable(int vertex, std::vector<int> clique);
  int vertex() const { return vertex_; }
  const std::vector<int>& clique() const { return clique_; }

 private:
  int vertex_;
  std::vector<int> clique_;
};

class NotInPdD : public Error {
 public:
  NotInPdD() : Error("matrix is not in PD_D") {}
};

class BadEpsilon : public Error {
 public:
  explicit BadEpsilon(double epsilon);
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace pdc

#endif  // PDC_ERRORS_HPP_
