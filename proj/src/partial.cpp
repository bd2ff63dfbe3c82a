#include "pdc/partial.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace pdc {

PartialMatrix::PartialMatrix(int p)
    : p_(p),
      values_(static_cast<std::size_t>(p) * p, 0.0),
      specified_(static_cast<std::size_t>(p) * p, 0) {}

std::size_t PartialMatrix::offset(int i, int j) const {
  return static_cast<std::size_t>(i - 1) * p_ + static_cast<std::size_t>(j - 1);
}

void PartialMatrix::check(int i, int j) const {
  if (i < 1 || i > p_ || j < 1 || j > p_)
    throw IndexOutOfRange("cell (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside a " + std::to_string(p_) + "x" + std::to_string(p_) +
                          " matrix");
}

PartialMatrix PartialMatrix::from_rows(const std::vector<std::vector<Cell>>& rows) {
  const int p = static_cast<int>(rows.size());
  PartialMatrix m(p);
  for (int i = 1; i <= p; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != p)
      throw DimensionMismatch("row " + std::to_string(i) + " has " +
                              std::to_string(rows[i - 1].size()) + " entries, expected " +
                              std::to_string(p));
  }
  for (int i = 1; i <= p; ++i) {
    if (!rows[i - 1][i - 1]) throw UnspecifiedDiagonal(i);
    for (int j = 1; j <= i; ++j) {
      const Cell& a = rows[i - 1][j - 1];
      const Cell& b = rows[j - 1][i - 1];
      if (a.has_value() != b.has_value() || (a && *a != *b)) throw AsymmetricValue(i, j);
      if (a) m.specify(i, j, *a);
    }
  }
  return m;
}

PartialMatrix PartialMatrix::diagonal(const std::vector<double>& values) {
  PartialMatrix m(static_cast<int>(values.size()));
  for (int i = 1; i <= m.p_; ++i) m.specify(i, i, values[i - 1]);
  return m;
}

PartialMatrix PartialMatrix::restrict_to_pattern(const SymMatrix& m, const UGraph& pattern) {
  if (pattern.size() != m.dim()) throw DimensionMismatch("pattern and matrix sizes differ");
  PartialMatrix out(m.dim());
  for (int i = 1; i <= m.dim(); ++i) out.specify(i, i, m(i, i));
  for (auto [i, j] : pattern.edges()) out.specify(i, j, m(i, j));
  return out;
}

bool PartialMatrix::is_specified(int i, int j) const {
  check(i, j);
  return specified_[offset(i, j)] != 0;
}

double PartialMatrix::value(int i, int j) const {
  if (!is_specified(i, j)) throw UnspecifiedCell(i, j);
  return values_[offset(i, j)];
}

Cell PartialMatrix::get(int i, int j) const {
  if (!is_specified(i, j)) return std::nullopt;
  return values_[offset(i, j)];
}

void PartialMatrix::specify(int i, int j, double v) {
  check(i, j);
  values_[offset(i, j)] = v;
  values_[offset(j, i)] = v;
  specified_[offset(i, j)] = 1;
  specified_[offset(j, i)] = 1;
}

UGraph PartialMatrix::pattern() const {
  std::vector<Edge> edges;
  for (int i = 1; i <= p_; ++i)
    for (int j = 1; j < i; ++j)
      if (specified_[offset(i, j)]) edges.emplace_back(i, j);
  return UGraph(p_, edges);
}

std::size_t PartialMatrix::specified_count() const {
  return static_cast<std::size_t>(std::count(specified_.begin(), specified_.end(), 1));
}

// ---------------------------------------------------------------------------

PartialMatrix from_dag_pattern(const Dag& d, const std::map<Position, double>& values) {
  const int p = d.size();
  std::map<Position, double> lower;
  for (const auto& [pos, v] : values) {
    const auto [a, b] = pos;
    if (a < 1 || a > p || b < 1 || b > p)
      throw IndexOutOfRange("cell (" + std::to_string(a) + "," + std::to_string(b) +
                            ") out of range");
    const Position key{std::max(a, b), std::min(a, b)};
    auto [it, inserted] = lower.emplace(key, v);
    if (!inserted && it->second != v) throw AsymmetricValue(key.first, key.second);
  }

  std::vector<Position> missing;
  std::vector<Position> extra;
  for (int i = 1; i <= p; ++i)
    if (!lower.count({i, i})) missing.emplace_back(i, i);
  for (const Edge& e : d.edges())
    if (!lower.count(e)) missing.push_back(e);
  for (const auto& [key, v] : lower) {
    if (key.first != key.second && !d.adjacent(key.first, key.second)) extra.push_back(key);
  }
  if (!missing.empty() || !extra.empty()) throw PatternMismatch(missing, extra);

  PartialMatrix gamma = PartialMatrix::diagonal(std::vector<double>(static_cast<std::size_t>(p)));
  for (const auto& [key, v] : lower) gamma.specify(key.first, key.second, v);
  return gamma;
}

void check_pattern(const PartialMatrix& gamma, const UGraph& g) {
  if (gamma.dim() != g.size())
    throw DimensionMismatch("matrix is " + std::to_string(gamma.dim()) + "x" +
                            std::to_string(gamma.dim()) + " but the graph has " +
                            std::to_string(g.size()) + " vertices");
  std::vector<Position> missing;
  std::vector<Position> extra;
  for (int i = 1; i <= g.size(); ++i) {
    for (int j = 1; j < i; ++j) {
      const bool edge = g.adjacent(i, j);
      const bool spec = gamma.is_specified(i, j);
      if (edge && !spec) missing.emplace_back(i, j);
      if (!edge && spec) extra.emplace_back(i, j);
    }
  }
  if (!missing.empty() || !extra.empty()) throw PatternMismatch(missing, extra);
}

void check_pattern(const PartialMatrix& gamma, const Dag& d) {
  check_pattern(gamma, undirected_version(d));
}

SymMatrix restrict(const PartialMatrix& gamma, const VertexSet& c) {
  const int n = static_cast<int>(c.size());
  SymMatrix out(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= a; ++b) out.set(a, b, gamma.value(c[a - 1], c[b - 1]));
  return out;
}

std::optional<VertexSet> find_non_pd_clique(const PartialMatrix& gamma, const UGraph& skeleton,
                                            double tol) {
  for (const VertexSet& c : maximal_cliques(skeleton)) {
    if (!is_positive_definite(restrict(gamma, c), tol)) return c;
  }
  return std::nullopt;
}

bool is_partial_positive_definite(const PartialMatrix& gamma, const UGraph& g, double tol) {
  check_pattern(gamma, g);
  return !find_non_pd_clique(gamma, g, tol).has_value();
}

bool is_partial_positive_definite(const PartialMatrix& gamma, const Dag& d, double tol) {
  return is_partial_positive_definite(gamma, undirected_version(d), tol);
}

SymMatrix zero_fill_in(const SymMatrix& m, const VertexSet& w, int p) {
  if (static_cast<int>(w.size()) != m.dim())
    throw DimensionMismatch("zero_fill_in: index set size differs from block size");
  SymMatrix out(p);
  for (int a = 1; a <= m.dim(); ++a) {
    if (w[a - 1] < 1 || w[a - 1] > p)
      throw IndexOutOfRange("zero_fill_in: index " + std::to_string(w[a - 1]) +
                            " outside 1.." + std::to_string(p));
    for (int b = 1; b <= a; ++b) out.set(w[a - 1], w[b - 1], m(a, b));
  }
  return out;
}

PartialMatrix permute(const PartialMatrix& gamma, const std::vector<int>& new_label) {
  const int p = gamma.dim();
  if (static_cast<int>(new_label.size()) != p) throw DimensionMismatch("permutation length");
  std::vector<std::vector<Cell>> rows(static_cast<std::size_t>(p),
                                      std::vector<Cell>(static_cast<std::size_t>(p)));
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j)
      rows[new_label[i - 1] - 1][new_label[j - 1] - 1] = gamma.get(i, j);
  return PartialMatrix::from_rows(rows);
}

// --------------------------------------------------------------------- I/O

PartialMatrix parse_partial_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::vector<std::vector<Cell>> rows;
  std::vector<int> row_lines;
  std::size_t width = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<Cell> row;
    std::size_t k = 0;
    bool comment = false;
    while (k < raw.size()) {
      while (k < raw.size() && (raw[k] == ' ' || raw[k] == '\t' || raw[k] == '\r')) ++k;
      if (k >= raw.size()) break;
      const std::size_t start = k;
      while (k < raw.size() && raw[k] != ' ' && raw[k] != '\t' && raw[k] != '\r') ++k;
      const std::string_view token(raw.data() + start, k - start);
      const int column = static_cast<int>(start) + 1;
      if (row.empty() && token.front() == '#') {
        comment = true;
        break;
      }
      if (token == "*" || token == "?") {
        row.emplace_back(std::nullopt);
        continue;
      }
      double v = 0.0;
      const char* first = token.data();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line_no, column, "expected a number, '*' or '?', got '" +
                                              std::string(token) + "'");
      row.emplace_back(v);
    }
    if (comment || row.empty()) continue;
    if (rows.empty()) width = row.size();
    if (row.size() != width)
      throw ParseError(line_no, 1, "row has " + std::to_string(row.size()) +
                                       " entries, expected " + std::to_string(width));
    rows.push_back(std::move(row));
    row_lines.push_back(line_no);
  }
  if (rows.empty()) throw ParseError(line_no + 1, 1, "empty matrix file");
  if (rows.size() != width)
    throw ParseError(line_no + 1, 1, "matrix has " + std::to_string(rows.size()) +
                                         " rows but " + std::to_string(width) + " columns");
  return PartialMatrix::from_rows(rows);
}

PartialMatrix read_partial_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_partial_matrix(buffer.str());
}

std::string serialize(const PartialMatrix& gamma) {
  std::string out;
  std::array<char, 64> buf{};
  for (int i = 1; i <= gamma.dim(); ++i) {
    for (int j = 1; j <= gamma.dim(); ++j) {
      if (j > 1) out += ' ';
      if (const Cell c = gamma.get(i, j)) {
        auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), *c);
        out.append(buf.data(), ptr);
      } else {
        out += '*';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace pdc
