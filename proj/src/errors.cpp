#include "pdc/errors.hpp"

#include <sstream>

namespace pdc {

namespace {

std::string join_positions(const std::vector<Position>& positions) {
  std::ostringstream out;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k > 0) out << ", ";
    out << "(" << positions[k].first << "," << positions[k].second << ")";
  }
  return out.str();
}

std::string join_vertices(const std::vector<int>& vertices, const char* sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k > 0) out << sep;
    out << vertices[k];
  }
  return out.str();
}

std::string pattern_message(const std::vector<Position>& missing,
                            const std::vector<Position>& extra) {
  std::string msg = "pattern mismatch";
  if (!missing.empty()) msg += "; missing: " + join_positions(missing);
  if (!extra.empty()) msg += "; extra: " + join_positions(extra);
  return msg;
}

}  // namespace

ZeroPivot::ZeroPivot(int index)
    : Error("zero pivot at index " + std::to_string(index)), index_(index) {}

CycleDetected::CycleDetected(std::vector<int> cycle)
    : GraphError("directed cycle: " + join_vertices(cycle, " -> ")),
      cycle_(std::move(cycle)) {}

PatternMismatch::PatternMismatch(std::vector<Position> missing,
                                 std::vector<Position> extra)
    : Error(pattern_message(missing, extra)),
      missing_(std::move(missing)),
      extra_(std::move(extra)) {}

AsymmetricValue::AsymmetricValue(int row, int col)
    : Error("asymmetric value at (" + std::to_string(row) + "," +
            std::to_string(col) + ")"),
      row_(row),
      col_(col) {}

UnspecifiedCell::UnspecifiedCell(int row, int col)
    : Error("unspecified cell (" + std::to_string(row) + "," +
            std::to_string(col) + ")"),
      row_(row),
      col_(col) {}

UnspecifiedDiagonal::UnspecifiedDiagonal(int index)
    : Error("diagonal entry " + std::to_string(index) + " is unspecified"),
      index_(index) {}

ParseError::ParseError(int line, int column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

NotPartialPd::NotPartialPd(std::vector<int> clique)
    : Error("restriction to clique {" + join_vertices(clique, ",") +
            "} is not positive definite"),
      clique_(std::move(clique)) {}

NotCompletable::NotCompletable(int vertex)
    : Error("no completion in PD_D: block check failed at vertex " +
            std::to_string(vertex)),
      vertex_(vertex) {}

NotCompletable::NotCompletable(int vertex, std::vector<int> clique)
    : Error("no completion in PD_D: closed partial matrix is not positive "
            "definite on clique {" + join_vertices(clique, ",") + "}"),
      vertex_(vertex),
      clique_(std::move(clique)) {}

BadEpsilon::BadEpsilon(double epsilon)
    : Error("epsilon " + std::to_string(epsilon) +
            " outside the open interval (sqrt(2)/2, 1)") {}

}  // namespace pdc
