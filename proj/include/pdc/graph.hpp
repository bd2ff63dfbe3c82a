#ifndef PDC_GRAPH_HPP_
#define PDC_GRAPH_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pdc/errors.hpp"

// Graph structure on vertices 1..p. Vertex sets are sorted ascending.
namespace pdc {

using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

// Undirected graph without self-loops. Edges are stored as (i, j) with i > j.
class UGraph {
 public:
  UGraph() = default;
  // Rejects self-loops, out-of-range vertices and duplicate edges (in either
  // orientation) with GraphError.
  UGraph(int p, const std::vector<Edge>& edges);
  static UGraph complete(int p);

  int size() const { return p_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted, each edge as (i, j) with i > j.
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& neighbors(int v) const;
  bool adjacent(int u, int v) const;
  // True when every pair of distinct vertices in `s` is adjacent.
  bool is_complete_subset(const VertexSet& s) const;

  friend bool operator==(const UGraph& a, const UGraph& b) {
    return a.p_ == b.p_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int p_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> neighbors_;
  std::vector<char> adjacency_;
};

// Directed graph with arbitrary labels, as read from a file or produced by
// orientation enumeration. Edge (i, j) means i -> j. No acyclicity or
// labeling guarantees.
struct Digraph {
  int p = 0;
  std::vector<Edge> edges;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

// Directed acyclic graph whose labels follow the ordering convention: every
// edge i -> j has i > j. Immutable after construction.
class Dag {
 public:
  Dag() = default;
  // Rejects self-loops, duplicates, out-of-range vertices and any edge with
  // i <= j (GraphError). Use topological_relabel for other labelings.
  Dag(int p, const std::vector<Edge>& edges);

  int size() const { return p_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted (i, j) pairs, i -> j.
  const std::vector<Edge>& edges() const { return edges_; }

  const VertexSet& parents(int j) const;
  const VertexSet& children(int j) const;
  // pa(j) plus j.
  VertexSet family(int j) const;
  // {i > j : i not in pa(j)}.
  VertexSet predecessors(int j) const;
  // Parents and children together.
  VertexSet neighbors(int j) const;

  bool has_edge(int from, int to) const;
  bool adjacent(int u, int v) const;

  friend bool operator==(const Dag& a, const Dag& b) {
    return a.p_ == b.p_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int p_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> parents_;
  std::vector<VertexSet> children_;
  std::vector<char> adjacency_;  // symmetric
};

// An induced subgraph high -> collider <- low with high > low non-adjacent.
struct Immorality {
  int high;
  int collider;
  int low;

  friend bool operator==(const Immorality&, const Immorality&) = default;
};

UGraph undirected_version(const Dag& d);

// Sorted by (collider, high, low); each immorality appears once.
std::vector<Immorality> immoralities(const Dag& d);
bool is_perfect(const Dag& d);
UGraph moral_graph(const Dag& d);

struct Relabeling {
  Dag dag;
  // new_label[v - 1] is the label of original vertex v in `dag`.
  std::vector<int> new_label;

  bool is_identity() const;
};

// Renumbers an acyclic digraph so every edge points from a higher to a lower
// label. Vertices are numbered from 1 upward, each time taking the smallest
// original label among vertices with no unnumbered children, so the
// permutation is the identity when the input already follows the convention.
// Throws CycleDetected with a witness cycle.
Relabeling topological_relabel(const Digraph& g);

// Inverse of a new_label permutation: old_label[n - 1] is the original
// vertex that received label n.
std::vector<int> invert_permutation(const std::vector<int>& new_label);

// Maximal cliques (Bron-Kerbosch with pivoting), each sorted, list sorted
// lexicographically.
std::vector<VertexSet> maximal_cliques(const UGraph& g);

struct ChordalityResult {
  bool decomposable = false;
  // Maximum cardinality search visit order (lowest label wins ties).
  std::vector<int> mcs_order;
  // Perfect elimination ordering (reverse visit order); empty when not
  // decomposable.
  std::vector<int> elimination_order;
};

ChordalityResult check_decomposable(const UGraph& g);
bool is_decomposable(const UGraph& g);

// A perfect DAG whose skeleton is g under a relabeling: vertices receive
// labels p, p-1, ..., 1 in maximum cardinality search order, and each vertex's
// earlier-visited neighbors become its parents. Throws NotDecomposable.
Relabeling perfect_dag_version(const UGraph& g);

// D(0) = d, D(t+1) adds high -> low for every immorality of D(t) at once,
// until the last DAG is perfect.
std::vector<Dag> immorality_closure(const Dag& d);

// All acyclic orientations of g's edges in the original labeling.
std::vector<Digraph> enumerate_acyclic_orientations(const UGraph& g);

// True iff every path from A to B meets S. Sets must be pairwise disjoint
// (OverlappingSets otherwise).
bool separates(const UGraph& g, const VertexSet& a, const VertexSet& b,
               const VertexSet& s);

// Relabels a graph by a new_label permutation.
UGraph permute(const UGraph& g, const std::vector<int>& new_label);
Digraph permute(const Digraph& g, const std::vector<int>& new_label);

// Graph file format: first non-comment line "dag <p>" or "ugraph <p>", then
// one "<i> <j>" edge per line (1-based; for dag, i -> j). Lines whose first
// non-blank character is '#' are comments.
using GraphFile = std::variant<Digraph, UGraph>;
GraphFile parse_graph(const std::string& text);
GraphFile read_graph_file(const std::string& path);
std::string serialize_graph(const Digraph& g);
std::string serialize_graph(const Dag& d);
std::string serialize_graph(const UGraph& g);

}  // namespace pdc

#endif  // PDC_GRAPH_HPP_
