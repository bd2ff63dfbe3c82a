#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "pdc/graph.hpp"

namespace pdc {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    if (k >= line.size()) break;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    tokens.push_back({line.substr(start, k - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int(const Token& t, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return value;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  bool directed = false;
  int p = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::vector<Token> tokens = split(raw);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 2 || (tokens[0].text != "dag" && tokens[0].text != "ugraph"))
        throw ParseError(line_no, tokens[0].column, "expected header 'dag <p>' or 'ugraph <p>'");
      directed = tokens[0].text == "dag";
      p = parse_int(tokens[1], line_no);
      if (p < 1) throw ParseError(line_no, tokens[1].column, "vertex count must be positive");
      have_header = true;
      continue;
    }
    if (tokens.size() != 2) {
      const int column = tokens.size() > 2 ? tokens[2].column : tokens[0].column;
      throw ParseError(line_no, column, "expected an edge '<i> <j>'");
    }
    const int i = parse_int(tokens[0], line_no);
    const int j = parse_int(tokens[1], line_no);
    if (i < 1 || i > p)
      throw ParseError(line_no, tokens[0].column, "vertex out of range 1.." + std::to_string(p));
    if (j < 1 || j > p)
      throw ParseError(line_no, tokens[1].column, "vertex out of range 1.." + std::to_string(p));
    edges.emplace_back(i, j);
  }
  if (!have_header) throw ParseError(line_no + 1, 1, "missing graph header");
  if (directed) return Digraph{p, std::move(edges)};
  return UGraph(p, edges);
}

GraphFile read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

std::string serialize_graph(const Digraph& g) {
  std::ostringstream out;
  out << "dag " << g.p << "\n";
  for (auto [i, j] : g.edges) out << i << " " << j << "\n";
  return out.str();
}

std::string serialize_graph(const Dag& d) {
  return serialize_graph(Digraph{d.size(), d.edges()});
}

std::string serialize_graph(const UGraph& g) {
  std::ostringstream out;
  out << "ugraph " << g.size() << "\n";
  for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
  return out.str();
}

}  // namespace pdc
