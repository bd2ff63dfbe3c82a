#include "pdc/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace pdc {

namespace {

std::string edge_text(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace

// ----------------------------------------------------------------- UGraph

UGraph::UGraph(int p, const std::vector<Edge>& edges)
    : p_(p),
      neighbors_(static_cast<std::size_t>(std::max(p, 0))),
      adjacency_(static_cast<std::size_t>(std::max(p, 0)) * std::max(p, 0), 0) {
  if (p < 0) throw GraphError("negative vertex count");
  for (auto [a, b] : edges) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    const int i = std::max(a, b);
    const int j = std::min(a, b);
    auto& cell = adjacency_[static_cast<std::size_t>(i - 1) * p_ + (j - 1)];
    if (cell) throw GraphError("duplicate edge " + edge_text(a, b));
    cell = 1;
    adjacency_[static_cast<std::size_t>(j - 1) * p_ + (i - 1)] = 1;
    edges_.emplace_back(i, j);
    neighbors_[i - 1].push_back(j);
    neighbors_[j - 1].push_back(i);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

UGraph UGraph::complete(int p) {
  std::vector<Edge> edges;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j < i; ++j) edges.emplace_back(i, j);
  return UGraph(p, edges);
}

void UGraph::check_vertex(int v) const {
  if (v < 1 || v > p_)
    throw IndexOutOfRange("vertex " + std::to_string(v) + " outside 1.." + std::to_string(p_));
}

const VertexSet& UGraph::neighbors(int v) const {
  check_vertex(v);
  return neighbors_[v - 1];
}

bool UGraph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(u - 1) * p_ + (v - 1)] != 0;
}

bool UGraph::is_complete_subset(const VertexSet& s) const {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!adjacent(s[a], s[b])) return false;
  return true;
}

// -------------------------------------------------------------------- Dag

Dag::Dag(int p, const std::vector<Edge>& edges)
    : p_(p),
      parents_(static_cast<std::size_t>(std::max(p, 0))),
      children_(static_cast<std::size_t>(std::max(p, 0))),
      adjacency_(static_cast<std::size_t>(std::max(p, 0)) * std::max(p, 0), 0) {
  if (p < 0) throw GraphError("negative vertex count");
  for (auto [i, j] : edges) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw GraphError("self-loop at vertex " + std::to_string(i));
    if (i < j) {
      throw GraphError("edge " + std::to_string(i) + " -> " + std::to_string(j) +
                       " violates the ordering convention (parent label must "
                       "exceed child label)");
    }
    auto& cell = adjacency_[static_cast<std::size_t>(i - 1) * p_ + (j - 1)];
    if (cell) throw GraphError("duplicate edge " + edge_text(i, j));
    cell = 1;
    adjacency_[static_cast<std::size_t>(j - 1) * p_ + (i - 1)] = 1;
    edges_.emplace_back(i, j);
    parents_[j - 1].push_back(i);
    children_[i - 1].push_back(j);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& s : parents_) std::sort(s.begin(), s.end());
  for (auto& s : children_) std::sort(s.begin(), s.end());
}

void Dag::check_vertex(int v) const {
  if (v < 1 || v > p_)
    throw IndexOutOfRange("vertex " + std::to_string(v) + " outside 1.." + std::to_string(p_));
}

const VertexSet& Dag::parents(int j) const {
  check_vertex(j);
  return parents_[j - 1];
}

const VertexSet& Dag::children(int j) const {
  check_vertex(j);
  return children_[j - 1];
}

VertexSet Dag::family(int j) const {
  VertexSet fa = parents(j);
  fa.insert(std::lower_bound(fa.begin(), fa.end(), j), j);
  return fa;
}

VertexSet Dag::predecessors(int j) const {
  const VertexSet& pa = parents(j);
  VertexSet pr;
  for (int i = j + 1; i <= p_; ++i)
    if (!contains(pa, i)) pr.push_back(i);
  return pr;
}

VertexSet Dag::neighbors(int j) const {
  VertexSet out;
  std::set_union(parents(j).begin(), parents(j).end(), children(j).begin(),
                 children(j).end(), std::back_inserter(out));
  return out;
}

bool Dag::has_edge(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  return from > to && adjacency_[static_cast<std::size_t>(from - 1) * p_ + (to - 1)] != 0;
}

bool Dag::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(u - 1) * p_ + (v - 1)] != 0;
}

// ------------------------------------------------------- structure queries

UGraph undirected_version(const Dag& d) { return UGraph(d.size(), d.edges()); }

std::vector<Immorality> immoralities(const Dag& d) {
  std::vector<Immorality> out;
  for (int k = 1; k <= d.size(); ++k) {
    const VertexSet& pa = d.parents(k);
    for (std::size_t a = 0; a < pa.size(); ++a) {
      for (std::size_t b = a + 1; b < pa.size(); ++b) {
        // pa is ascending, so pa[b] > pa[a].
        if (!d.adjacent(pa[a], pa[b])) out.push_back({pa[b], k, pa[a]});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Immorality& x, const Immorality& y) {
    return std::tie(x.collider, x.high, x.low) < std::tie(y.collider, y.high, y.low);
  });
  return out;
}

bool is_perfect(const Dag& d) {
  for (int k = 1; k <= d.size(); ++k) {
    const VertexSet& pa = d.parents(k);
    for (std::size_t a = 0; a < pa.size(); ++a)
      for (std::size_t b = a + 1; b < pa.size(); ++b)
        if (!d.adjacent(pa[a], pa[b])) return false;
  }
  return true;
}

UGraph moral_graph(const Dag& d) {
  std::set<Edge> edges(d.edges().begin(), d.edges().end());
  for (const Immorality& im : immoralities(d)) edges.emplace(im.high, im.low);
  return UGraph(d.size(), std::vector<Edge>(edges.begin(), edges.end()));
}

// ----------------------------------------------------------- relabeling

bool Relabeling::is_identity() const {
  for (std::size_t v = 0; v < new_label.size(); ++v)
    if (new_label[v] != static_cast<int>(v) + 1) return false;
  return true;
}

std::vector<int> invert_permutation(const std::vector<int>& new_label) {
  std::vector<int> old_label(new_label.size());
  for (std::size_t v = 0; v < new_label.size(); ++v)
    old_label[static_cast<std::size_t>(new_label[v] - 1)] = static_cast<int>(v) + 1;
  return old_label;
}

namespace {

void validate_digraph(const Digraph& g) {
  if (g.p < 0) throw GraphError("negative vertex count");
  std::set<Edge> seen;
  for (auto [i, j] : g.edges) {
    if (i < 1 || i > g.p || j < 1 || j > g.p)
      throw IndexOutOfRange("edge " + edge_text(i, j) + " outside 1.." + std::to_string(g.p));
    if (i == j) throw GraphError("self-loop at vertex " + std::to_string(i));
    if (!seen.emplace(i, j).second) throw GraphError("duplicate edge " + edge_text(i, j));
    if (seen.count({j, i}))
      throw GraphError("edges " + edge_text(i, j) + " and " + edge_text(j, i) +
                       " form a 2-cycle");
  }
}

std::vector<int> find_cycle(int p, const std::vector<VertexSet>& children,
                            const std::vector<char>& done) {
  // Every remaining vertex has a remaining child; walk until a repeat.
  int start = 0;
  for (int v = 1; v <= p; ++v) {
    if (!done[v - 1]) {
      start = v;
      break;
    }
  }
  std::vector<int> position(static_cast<std::size_t>(p), -1);
  std::vector<int> walk;
  int v = start;
  while (position[v - 1] < 0) {
    position[v - 1] = static_cast<int>(walk.size());
    walk.push_back(v);
    for (int c : children[v - 1]) {
      if (!done[c - 1]) {
        v = c;
        break;
      }
    }
  }
  return std::vector<int>(walk.begin() + position[v - 1], walk.end());
}

}  // namespace

Relabeling topological_relabel(const Digraph& g) {
  validate_digraph(g);
  const int p = g.p;
  std::vector<VertexSet> children(static_cast<std::size_t>(p));
  std::vector<int> open_children(static_cast<std::size_t>(p), 0);
  std::vector<VertexSet> parents(static_cast<std::size_t>(p));
  for (auto [i, j] : g.edges) {
    children[i - 1].push_back(j);
    parents[j - 1].push_back(i);
    ++open_children[i - 1];
  }
  std::set<int> ready;
  for (int v = 1; v <= p; ++v)
    if (open_children[v - 1] == 0) ready.insert(v);

  std::vector<int> new_label(static_cast<std::size_t>(p), 0);
  std::vector<char> done(static_cast<std::size_t>(p), 0);
  for (int next = 1; next <= p; ++next) {
    if (ready.empty()) throw CycleDetected(find_cycle(p, children, done));
    const int v = *ready.begin();
    ready.erase(ready.begin());
    new_label[v - 1] = next;
    done[v - 1] = 1;
    for (int u : parents[v - 1])
      if (--open_children[u - 1] == 0) ready.insert(u);
  }

  std::vector<Edge> edges;
  edges.reserve(g.edges.size());
  for (auto [i, j] : g.edges) edges.emplace_back(new_label[i - 1], new_label[j - 1]);
  return Relabeling{Dag(p, edges), std::move(new_label)};
}

UGraph permute(const UGraph& g, const std::vector<int>& new_label) {
  std::vector<Edge> edges;
  for (auto [i, j] : g.edges()) edges.emplace_back(new_label[i - 1], new_label[j - 1]);
  return UGraph(g.size(), edges);
}

Digraph permute(const Digraph& g, const std::vector<int>& new_label) {
  Digraph out{g.p, {}};
  for (auto [i, j] : g.edges) out.edges.emplace_back(new_label[i - 1], new_label[j - 1]);
  return out;
}

// -------------------------------------------------------------- cliques

std::vector<VertexSet> maximal_cliques(const UGraph& g) {
  std::vector<VertexSet> cliques;
  VertexSet r;
  std::function<void(VertexSet, VertexSet)> expand = [&](VertexSet p_set, VertexSet x_set) {
    if (p_set.empty() && x_set.empty()) {
      VertexSet c = r;
      std::sort(c.begin(), c.end());
      cliques.push_back(std::move(c));
      return;
    }
    // Pivot: vertex of P u X with the most neighbors in P.
    int pivot = 0;
    std::size_t best = 0;
    for (const VertexSet* s : {&p_set, &x_set}) {
      for (int u : *s) {
        std::size_t count = 0;
        for (int v : p_set) count += g.adjacent(u, v) ? 1 : 0;
        if (pivot == 0 || count > best) {
          pivot = u;
          best = count;
        }
      }
    }
    VertexSet candidates;
    for (int v : p_set)
      if (!g.adjacent(pivot, v)) candidates.push_back(v);
    for (int v : candidates) {
      VertexSet p_next;
      VertexSet x_next;
      for (int u : p_set)
        if (g.adjacent(u, v)) p_next.push_back(u);
      for (int u : x_set)
        if (g.adjacent(u, v)) x_next.push_back(u);
      r.push_back(v);
      expand(std::move(p_next), std::move(x_next));
      r.pop_back();
      p_set.erase(std::find(p_set.begin(), p_set.end(), v));
      x_set.insert(std::upper_bound(x_set.begin(), x_set.end(), v), v);
    }
  };
  VertexSet all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 1);
  expand(all, {});
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

// ------------------------------------------------------------ chordality

ChordalityResult check_decomposable(const UGraph& g) {
  const int p = g.size();
  ChordalityResult result;
  std::vector<int> weight(static_cast<std::size_t>(p), 0);
  std::vector<int> position(static_cast<std::size_t>(p), -1);
  for (int step = 0; step < p; ++step) {
    int pick = 0;
    for (int v = 1; v <= p; ++v) {
      if (position[v - 1] >= 0) continue;
      if (pick == 0 || weight[v - 1] > weight[pick - 1]) pick = v;
    }
    position[pick - 1] = step;
    result.mcs_order.push_back(pick);
    for (int u : g.neighbors(pick))
      if (position[u - 1] < 0) ++weight[u - 1];
  }

  // Each vertex's earlier-visited neighbors must all be adjacent to the most
  // recently visited one among them.
  for (int v : result.mcs_order) {
    int latest = 0;
    for (int u : g.neighbors(v)) {
      if (position[u - 1] < position[v - 1] &&
          (latest == 0 || position[u - 1] > position[latest - 1]))
        latest = u;
    }
    if (latest == 0) continue;
    for (int u : g.neighbors(v)) {
      if (u != latest && position[u - 1] < position[v - 1] && !g.adjacent(u, latest))
        return result;
    }
  }
  result.decomposable = true;
  result.elimination_order.assign(result.mcs_order.rbegin(), result.mcs_order.rend());
  return result;
}

bool is_decomposable(const UGraph& g) { return check_decomposable(g).decomposable; }

Relabeling perfect_dag_version(const UGraph& g) {
  const ChordalityResult chordal = check_decomposable(g);
  if (!chordal.decomposable) throw NotDecomposable();
  const int p = g.size();
  std::vector<int> new_label(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) new_label[chordal.mcs_order[k] - 1] = p - k;
  std::vector<Edge> edges;
  for (auto [i, j] : g.edges()) {
    const int a = new_label[i - 1];
    const int b = new_label[j - 1];
    edges.emplace_back(std::max(a, b), std::min(a, b));
  }
  return Relabeling{Dag(p, edges), std::move(new_label)};
}

// ------------------------------------------------------ closure, orientations

std::vector<Dag> immorality_closure(const Dag& d) {
  std::vector<Dag> sequence{d};
  while (true) {
    const std::vector<Immorality> imm = immoralities(sequence.back());
    if (imm.empty()) break;
    std::set<Edge> edges(sequence.back().edges().begin(), sequence.back().edges().end());
    for (const Immorality& im : imm) edges.emplace(im.high, im.low);
    sequence.emplace_back(d.size(), std::vector<Edge>(edges.begin(), edges.end()));
  }
  return sequence;
}

std::vector<Digraph> enumerate_acyclic_orientations(const UGraph& g) {
  const int p = g.size();
  const std::vector<Edge>& edges = g.edges();
  std::vector<Digraph> out;
  std::vector<VertexSet> out_arcs(static_cast<std::size_t>(p));
  std::vector<Edge> chosen;
  std::vector<char> seen(static_cast<std::size_t>(p));

  auto reaches = [&](int from, int to) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> stack{from};
    seen[from - 1] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (int w : out_arcs[v - 1]) {
        if (!seen[w - 1]) {
          seen[w - 1] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  };

  std::function<void(std::size_t)> orient = [&](std::size_t k) {
    if (k == edges.size()) {
      Digraph d{p, chosen};
      std::sort(d.edges.begin(), d.edges.end());
      out.push_back(std::move(d));
      return;
    }
    const auto [i, j] = edges[k];
    for (const Edge& arc : {Edge{i, j}, Edge{j, i}}) {
      // arc.first -> arc.second closes a cycle iff second already reaches first.
      if (reaches(arc.second, arc.first)) continue;
      out_arcs[arc.first - 1].push_back(arc.second);
      chosen.push_back(arc);
      orient(k + 1);
      chosen.pop_back();
      out_arcs[arc.first - 1].pop_back();
    }
  };
  orient(0);
  return out;
}

bool separates(const UGraph& g, const VertexSet& a, const VertexSet& b,
               const VertexSet& s) {
  const int p = g.size();
  std::vector<char> role(static_cast<std::size_t>(p), 0);
  auto mark = [&](const VertexSet& set, char tag) {
    for (int v : set) {
      if (v < 1 || v > p) throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
      if (role[v - 1] != 0) throw OverlappingSets("vertex sets A, B, S must be disjoint");
      role[v - 1] = tag;
    }
  };
  mark(a, 'a');
  mark(b, 'b');
  mark(s, 's');

  std::vector<char> seen(static_cast<std::size_t>(p), 0);
  std::vector<int> stack(a.begin(), a.end());
  for (int v : a) seen[v - 1] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (role[v - 1] == 'b') return false;
    for (int w : g.neighbors(v)) {
      if (!seen[w - 1] && role[w - 1] != 's') {
        seen[w - 1] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

}  // namespace pdc
