#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "pdc/analytics.hpp"
#include "pdc/completion.hpp"
#include "pdc/graph.hpp"
#include "pdc/partial.hpp"

namespace pdc::cli {

namespace {

using nlohmann::json;

// Bad files, bad flags and anything else the user must fix.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------- rendering

json to_json(const SymMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.dim(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.dim(); ++j) {
      if (std::isfinite(m(i, j)))
        row.push_back(m(i, j));
      else
        row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.rows(); ++i) rows.push_back(json(std::vector<double>(m.row(i).begin(), m.row(i).end())));
  return rows;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [i, j] : edges) out.push_back({i, j});
  return out;
}

std::string vertex_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

std::string immorality_text(const Immorality& m) {
  return "(" + std::to_string(m.high) + "," + std::to_string(m.collider) + "," +
         std::to_string(m.low) + ")";
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// --------------------------------------------------------------- loading

GraphFile load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

PartialMatrix load_matrix(const std::string& path) {
  try {
    return read_partial_matrix_file(path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const Error& e) {
    throw InputError(path + ": " + std::string(e.what()));
  }
}

struct LoadedDag {
  Dag dag;
  // new_label[v - 1] is the working label of file vertex v.
  std::vector<int> new_label;
  bool relabeled = false;
};

LoadedDag load_dag(const RunConfig& c) {
  const GraphFile g = load_graph(c.graph_path);
  if (!std::holds_alternative<Digraph>(g))
    throw InputError(c.graph_path + ": expected a 'dag' graph file");
  const Digraph& dg = std::get<Digraph>(g);
  if (c.relabel) {
    try {
      Relabeling r = topological_relabel(dg);
      const bool moved = !r.is_identity();
      return {std::move(r.dag), std::move(r.new_label), moved};
    } catch (const GraphError& e) {
      throw InputError(c.graph_path + ": " + e.what());
    }
  }
  try {
    std::vector<int> identity(static_cast<std::size_t>(dg.p));
    for (int v = 1; v <= dg.p; ++v) identity[v - 1] = v;
    return {Dag(dg.p, dg.edges), identity, false};
  } catch (const GraphError& e) {
    throw InputError(c.graph_path + ": " + e.what() +
                     " (every edge i -> j needs i > j; pass --relabel to renumber)");
  }
}

UGraph load_skeleton(const RunConfig& c) {
  const GraphFile g = load_graph(c.graph_path);
  if (const auto* u = std::get_if<UGraph>(&g)) return *u;
  const Digraph& dg = std::get<Digraph>(g);
  try {
    return UGraph(dg.p, dg.edges);
  } catch (const GraphError& e) {
    throw InputError(c.graph_path + ": " + e.what());
  }
}

PartialMatrix load_matrix_for(const RunConfig& c, const LoadedDag& ld) {
  if (c.matrix_path.empty()) throw InputError("--matrix is required");
  PartialMatrix gamma = load_matrix(c.matrix_path);
  if (gamma.dim() != ld.dag.size())
    throw InputError(c.matrix_path + ": matrix is " + std::to_string(gamma.dim()) + "x" +
                     std::to_string(gamma.dim()) + " but the graph has " +
                     std::to_string(ld.dag.size()) + " vertices");
  if (ld.relabeled) gamma = permute(gamma, ld.new_label);
  return gamma;
}

SymMatrix to_original(const SymMatrix& m, const LoadedDag& ld) {
  return ld.relabeled ? permute(m, invert_permutation(ld.new_label)) : m;
}

int to_original(int v, const LoadedDag& ld) {
  return (ld.relabeled && v > 0) ? invert_permutation(ld.new_label)[v - 1] : v;
}

SymMatrix require_full(const PartialMatrix& m, const std::string& path) {
  SymMatrix out(m.dim());
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= i; ++j) {
      const Cell c = m.get(i, j);
      if (!c)
        throw InputError(path + ": cell (" + std::to_string(i) + "," + std::to_string(j) +
                         ") must be specified");
      out.set(i, j, *c);
    }
  return out;
}

void print_relabel(std::ostream& out, const LoadedDag& ld) {
  if (!ld.relabeled) return;
  out << "relabel:";
  for (std::size_t v = 0; v < ld.new_label.size(); ++v)
    out << " " << v + 1 << "->" << ld.new_label[v];
  out << "\n";
}

void add_relabel(json& j, const LoadedDag& ld) {
  if (ld.relabeled) j["relabel"] = ld.new_label;
}

// -------------------------------------------------------------- commands

int cmd_complete_pd(const RunConfig& c, std::ostream& out) {
  const LoadedDag ld = load_dag(c);
  const PartialMatrix gamma = load_matrix_for(c, ld);
  const PdCompletionResult r = complete_in_pd(gamma, ld.dag, PdOptions{c.tol, c.diagnose});
  const SymMatrix sigma = to_original(r.sigma, ld);
  const double residual = r.completed() ? max_markov_residual(r.sigma, ld.dag) : NAN;

  std::vector<int> failing;
  for (int v : r.failing_vertices) failing.push_back(to_original(v, ld));

  if (c.output == Output::kJson) {
    json j;
    j["status"] = r.completed() ? "completed" : "not_completable";
    j["space"] = "pd";
    j["sigma"] = to_json(sigma);
    j["failing_vertex"] = r.completed() ? json(nullptr) : json(to_original(r.failing_vertex, ld));
    j["failing_vertices"] = failing;
    j["residual_max"] = std::isfinite(residual) ? json(residual) : json(nullptr);
    add_relabel(j, ld);
    print_json(out, j);
  } else {
    print_relabel(out, ld);
    if (r.completed()) {
      out << "status: completed in PD_D\n";
    } else {
      out << "status: not completable in PD_D\n";
      out << "failing vertex: " << to_original(r.failing_vertex, ld) << "\n";
      if (c.diagnose) {
        out << "failing vertices:";
        for (int v : failing) out << " " << v;
        out << "\n";
      }
    }
    out << "sigma:\n" << format_matrix(sigma, c.precision);
    if (r.completed()) out << "residual_max: " << format_number(residual, c.precision) << "\n";
  }
  return r.completed() ? kExitOk : kExitNegative;
}

int cmd_complete_p(const RunConfig& c, std::ostream& out) {
  const LoadedDag ld = load_dag(c);
  const PartialMatrix gamma = load_matrix_for(c, ld);
  PCompletionResult r;
  try {
    r = complete_in_p(gamma, ld.dag);
  } catch (const ZeroPivot& e) {
    if (c.output == Output::kJson) {
      json j;
      j["status"] = "zero_pivot";
      j["space"] = "p";
      j["failing_vertex"] = to_original(e.index(), ld);
      add_relabel(j, ld);
      print_json(out, j);
    } else {
      print_relabel(out, ld);
      out << "status: no completion in P_D (Lambda vanishes at column "
          << to_original(e.index(), ld) << " while parents remain)\n";
    }
    return kExitNegative;
  }
  double residual = 0.0;
  for (int i = 1; i <= gamma.dim(); ++i)
    for (int j = 1; j <= i; ++j)
      if (const Cell v = gamma.get(i, j))
        residual = std::max(residual, std::abs(r.completed(i, j) - *v));
  const SymMatrix gamma_hat = to_original(r.completed, ld);

  if (c.output == Output::kJson) {
    json j;
    j["status"] = r.in_p_d ? "completed" : "not_in_p_d";
    j["space"] = "p";
    j["gamma_hat"] = to_json(gamma_hat);
    j["L"] = to_json(r.factor.lower);
    j["lambda"] = r.factor.diag;
    j["failing_vertex"] = r.in_p_d ? json(nullptr) : json(to_original(r.first_nonpositive, ld));
    j["residual_max"] = residual;
    add_relabel(j, ld);
    print_json(out, j);
  } else {
    print_relabel(out, ld);
    out << (r.in_p_d ? "status: completed in P_D\n" : "status: not in P_D\n");
    if (!r.in_p_d) out << "first non-positive Lambda: " << r.first_nonpositive << "\n";
    out << "lambda:";
    for (double v : r.factor.diag) out << "  " << format_number(v, c.precision);
    out << "\nL:\n" << format_matrix(r.factor.lower, c.precision);
    out << "gamma_hat:\n" << format_matrix(gamma_hat, c.precision);
    out << "residual_max: " << format_number(residual, c.precision) << "\n";
  }
  return r.in_p_d ? kExitOk : kExitNegative;
}

int verdict(bool ok) { return ok ? kExitOk : kExitNegative; }

int cmd_check(const RunConfig& c, std::ostream& out) {
  json j;
  bool ok = false;
  std::ostringstream text;
  switch (c.check) {
    case CheckKind::kPerfect: {
      const LoadedDag ld = load_dag(c);
      const std::vector<Immorality> imm = immoralities(ld.dag);
      ok = imm.empty();
      j["check"] = "perfect";
      json w = json::array();
      text << "perfect: " << (ok ? "true" : "false") << "\n";
      for (const Immorality& m : imm) {
        w.push_back({m.high, m.collider, m.low});
        text << "immorality: " << immorality_text(m) << "\n";
      }
      j["immoralities"] = w;
      add_relabel(j, ld);
      break;
    }
    case CheckKind::kDecomposable: {
      const UGraph g = load_skeleton(c);
      const ChordalityResult r = check_decomposable(g);
      ok = r.decomposable;
      j["check"] = "decomposable";
      j["elimination_order"] = r.elimination_order;
      text << "decomposable: " << (ok ? "true" : "false") << "\n";
      if (ok) {
        text << "elimination order:";
        for (int v : r.elimination_order) text << " " << v;
        text << "\n";
      }
      break;
    }
    case CheckKind::kQd: {
      const LoadedDag ld = load_dag(c);
      const PartialMatrix gamma = load_matrix_for(c, ld);
      check_pattern(gamma, ld.dag);
      const auto clique = find_non_pd_clique(gamma, undirected_version(ld.dag), c.tol);
      ok = !clique;
      j["check"] = "qd";
      if (clique) {
        VertexSet orig;
        for (int v : *clique) orig.push_back(to_original(v, ld));
        std::sort(orig.begin(), orig.end());
        j["failing_clique"] = orig;
        text << "partial positive definite: false\nfailing clique: " << vertex_set(orig) << "\n";
      } else {
        j["failing_clique"] = nullptr;
        text << "partial positive definite: true\n";
      }
      break;
    }
    case CheckKind::kInPd: {
      const LoadedDag ld = load_dag(c);
      const SymMatrix sigma = require_full(load_matrix_for(c, ld), c.matrix_path);
      const bool pd = is_positive_definite(sigma, c.tol);
      const double residual = max_markov_residual(sigma, ld.dag);
      ok = verify_in_pd(sigma, ld.dag, c.tol);
      j["check"] = "in_pd";
      j["positive_definite"] = pd;
      j["residual_max"] = std::isfinite(residual) ? json(residual) : json(nullptr);
      text << "in PD_D: " << (ok ? "true" : "false") << "\npositive definite: "
           << (pd ? "true" : "false") << "\nresidual_max: " << format_number(residual, c.precision)
           << "\n";
      break;
    }
    case CheckKind::kInP: {
      const LoadedDag ld = load_dag(c);
      const SymMatrix omega = require_full(load_matrix_for(c, ld), c.matrix_path);
      ok = verify_in_p(omega, ld.dag, c.tol);
      j["check"] = "in_p";
      text << "in P_D: " << (ok ? "true" : "false") << "\n";
      try {
        const LdlFactor f = modified_cholesky(omega);
        const double off = max_off_pattern_factor(f, ld.dag);
        j["lambda"] = f.diag;
        j["max_off_pattern_factor"] = off;
        text << "lambda:";
        for (double v : f.diag) text << "  " << format_number(v, c.precision);
        text << "\nmax off-pattern |L_ij|: " << format_number(off, c.precision) << "\n";
      } catch (const ZeroPivot& e) {
        j["zero_pivot"] = to_original(e.index(), ld);
        text << "zero pivot at column " << to_original(e.index(), ld) << "\n";
      }
      break;
    }
    case CheckKind::kNone:
      throw InputError("check needs one of --perfect, --decomposable, --qd, --in-pd, --in-p");
  }
  j["result"] = ok;
  if (c.output == Output::kJson)
    print_json(out, j);
  else
    out << text.str();
  return verdict(ok);
}

int cmd_inverse(const RunConfig& c, std::ostream& out, bool det_only) {
  const LoadedDag ld = load_dag(c);
  const PartialMatrix gamma = load_matrix_for(c, ld);
  const InverseReport r = markov_inverse(gamma, ld.dag, c.tol);
  const double det = markov_determinant(gamma, ld.dag, c.tol);
  const double det_blocks = markov_determinant_by_blocks(gamma, ld.dag, c.tol);
  const SymMatrix omega = to_original(r.omega, ld);
  std::vector<FamilyTerm> families = r.per_family_terms;
  for (FamilyTerm& t : families) {
    t.vertex = to_original(t.vertex, ld);
    for (int& v : t.family) v = to_original(v, ld);
    for (int& v : t.parents) v = to_original(v, ld);
    std::sort(t.family.begin(), t.family.end());
    std::sort(t.parents.begin(), t.parents.end());
  }
  std::vector<FilledCell> cells = r.materialized_cells;
  for (FilledCell& f : cells) {
    const int a = to_original(f.row, ld);
    const int b = to_original(f.col, ld);
    f.row = std::max(a, b);
    f.col = std::min(a, b);
  }

  if (c.output == Output::kJson) {
    json j;
    j["status"] = "completed";
    if (!det_only) j["omega"] = to_json(omega);
    j["det_omega"] = det;
    j["det_omega_by_blocks"] = det_blocks;
    j["log_det_omega"] = r.log_det_omega;
    json fams = json::array();
    for (const FamilyTerm& t : families)
      fams.push_back({{"vertex", t.vertex},
                      {"family", t.family},
                      {"parents", t.parents},
                      {"conditional_variance", t.conditional_variance}});
    j["families"] = fams;
    json filled = json::array();
    for (const FilledCell& f : cells) filled.push_back({f.row, f.col, f.value});
    j["materialized_cells"] = filled;
    add_relabel(j, ld);
    print_json(out, j);
    return kExitOk;
  }
  print_relabel(out, ld);
  if (!det_only) out << "omega:\n" << format_matrix(omega, c.precision);
  out << "det_omega: " << format_number(det, c.precision) << "\n";
  if (det_only || c.verbose)
    out << "log_det_omega: " << format_number(r.log_det_omega, c.precision) << "\n";
  if (c.verbose) {
    out << "det_omega (block ratio): " << format_number(det_blocks, c.precision) << "\n";
    for (const FamilyTerm& t : families)
      out << "family " << t.vertex << ": fa=" << vertex_set(t.family)
          << " pa=" << vertex_set(t.parents)
          << " var|pa=" << format_number(t.conditional_variance, c.precision) << "\n";
    out << "materialized cells:";
    if (cells.empty()) out << " none";
    for (const FilledCell& f : cells)
      out << " (" << f.row << "," << f.col << ")=" << format_number(f.value, c.precision);
    out << "\n";
  }
  return kExitOk;
}

int cmd_counterexample(const RunConfig& c, std::ostream& out) {
  const LoadedDag ld = load_dag(c);
  const Counterexample ce = counterexample_partial_matrix(ld.dag, c.epsilon);
  const bool in_q = is_partial_positive_definite(ce.gamma, ld.dag, c.tol);
  const PdCompletionResult r = complete_in_pd(ce.gamma, ld.dag, PdOptions{c.tol, false});
  const PartialMatrix file_gamma =
      ld.relabeled ? permute(ce.gamma, invert_permutation(ld.new_label)) : ce.gamma;
  const Immorality m{to_original(ce.immorality.high, ld), to_original(ce.immorality.collider, ld),
                     to_original(ce.immorality.low, ld)};

  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path);
    if (!f) throw InputError("cannot write '" + c.out_path + "'");
    f << serialize(file_gamma);
  }
  if (c.output == Output::kJson) {
    json j;
    j["immorality"] = {m.high, m.collider, m.low};
    j["epsilon"] = c.epsilon;
    j["in_qd"] = in_q;
    j["completable"] = r.completed();
    j["failing_vertex"] = r.completed() ? json(nullptr) : json(to_original(r.failing_vertex, ld));
    json rows = json::array();
    for (int i = 1; i <= file_gamma.dim(); ++i) {
      json row = json::array();
      for (int k = 1; k <= file_gamma.dim(); ++k) {
        const Cell v = file_gamma.get(i, k);
        row.push_back(v ? json(*v) : json(nullptr));
      }
      rows.push_back(row);
    }
    j["gamma"] = rows;
    print_json(out, j);
  } else {
    if (c.out_path.empty()) out << serialize(file_gamma);
    out << "# immorality " << immorality_text(m) << ", epsilon " << c.epsilon << "\n";
    out << "# partial positive definite: " << (in_q ? "true" : "false") << "\n";
    if (r.completed())
      out << "# complete_in_pd: completed\n";
    else
      out << "# complete_in_pd: family not positive definite at vertex "
          << to_original(r.failing_vertex, ld) << "\n";
  }
  return kExitOk;
}

int cmd_c4(const RunConfig& c, std::ostream& out) {
  if (c.c4_args.size() != 4) throw InputError("c4 needs four values a b c d");
  const C4Report r = c4_inequalities(c.c4_args[0], c.c4_args[1], c.c4_args[2], c.c4_args[3]);
  if (c.output == Output::kJson) {
    json j{{"f", r.f},   {"f1", r.f1}, {"f2", r.f2}, {"f3", r.f3},
           {"f4", r.f4}, {"f5", r.f5}, {"f6", r.f6}};
    j["f5_branches"] = r.f5_branches;
    j["f6_branches"] = r.f6_branches;
    j["grone_completable"] = r.grone_completable;
    j["dag_completable_any"] = r.dag_completable_any;
    print_json(out, j);
    return kExitOk;
  }
  const int p = c.precision;
  out << "f=" << format_number(r.f, p) << "\n";
  const auto fs = r.fs();
  for (int k = 0; k < 6; ++k) out << "f" << k + 1 << "=" << format_number(fs[k], p) << "\n";
  out << "f5 branches: " << format_number(r.f5_branches[0], p) << " "
      << format_number(r.f5_branches[1], p) << "\n";
  out << "f6 branches: " << format_number(r.f6_branches[0], p) << " "
      << format_number(r.f6_branches[1], p) << "\n";
  out << "grone_completable: " << (r.grone_completable ? "true" : "false") << "\n";
  out << "dag_completable_any: " << (r.dag_completable_any ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_orientations(const RunConfig& c, std::ostream& out) {
  const UGraph g = load_skeleton(c);
  const std::vector<Digraph> all = enumerate_acyclic_orientations(g);
  if (c.output == Output::kJson) {
    json list = json::array();
    for (const Digraph& d : all) list.push_back(edges_json(d.edges));
    print_json(out, json{{"count", all.size()}, {"orientations", list}});
    return kExitOk;
  }
  out << "# " << all.size() << " acyclic orientations\n";
  for (std::size_t k = 0; k < all.size(); ++k) {
    out << "# orientation " << k + 1 << "\n" << serialize_graph(all[k]);
    if (k + 1 < all.size()) out << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------ arguments

void add_graph_opts(CLI::App* sub, RunConfig& c, bool matrix_required) {
  sub->add_option("--graph", c.graph_path, "Graph file")->required();
  auto* m = sub->add_option("--matrix", c.matrix_path, "Partial matrix file");
  if (matrix_required) m->required();
}

void add_common_opts(CLI::App* sub, RunConfig& c) {
  sub->add_option("--tol", c.tol, "Positive definiteness tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_flag_function("--json", [&c](std::int64_t) { c.output = Output::kJson; },
                         "Machine-readable output");
  sub->add_option("--precision", c.precision, "Significant digits in text output")
      ->check(CLI::Range(1, 17));
}

}  // namespace

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "*";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string format_matrix(const SymMatrix& m, int precision) {
  std::string out;
  for (int i = 1; i <= m.dim(); ++i) {
    for (int j = 1; j <= m.dim(); ++j) {
      if (j > 1) out += "  ";
      out += format_number(m(i, j), precision);
    }
    out += "\n";
  }
  return out;
}

std::string format_matrix(const Matrix& m, int precision) {
  std::string out;
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      if (j > 1) out += "  ";
      out += format_number(m(i, j), precision);
    }
    out += "\n";
  }
  return out;
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::kComplete:
        return c.space == Space::kPd ? cmd_complete_pd(c, out) : cmd_complete_p(c, out);
      case Command::kCheck:
        return cmd_check(c, out);
      case Command::kInverse:
        return cmd_inverse(c, out, false);
      case Command::kDet:
        return cmd_inverse(c, out, true);
      case Command::kCounterexample:
        return cmd_counterexample(c, out);
      case Command::kC4:
        return cmd_c4(c, out);
      case Command::kOrientations:
        return cmd_orientations(c, out);
      case Command::kNone:
        err << "error: a subcommand is required (see --help)\n";
        return kExitInputError;
    }
  } catch (const NotCompletable& e) {
    err << "not completable: " << e.what() << "\n";
    return kExitNegative;
  } catch (const PerfectDag& e) {
    err << e.what() << "\n";
    return kExitNegative;
  } catch (const PatternMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Completion of partial matrices over DAG patterns", "pdc"};
  app.require_subcommand(1);

  auto* complete = app.add_subcommand("complete", "Complete a partial matrix in PD_D or P_D");
  std::string space = "pd";
  complete->add_option("--space", space, "Target space")
      ->check(CLI::IsMember({"pd", "p"}));
  add_graph_opts(complete, c, true);
  add_common_opts(complete, c);
  complete->add_flag("--diagnose", c.diagnose, "Report every failing vertex");
  complete->add_flag("--relabel", c.relabel, "Renumber the DAG topologically");

  auto* check = app.add_subcommand("check", "Structural and membership checks");
  auto* g_check = check->add_option_group("kind");
  bool perfect = false, decomposable = false, qd = false, in_pd = false, in_p = false;
  g_check->add_flag("--perfect", perfect, "DAG has no immorality");
  g_check->add_flag("--decomposable", decomposable, "Skeleton is chordal");
  g_check->add_flag("--qd", qd, "Partial matrix is partial positive definite");
  g_check->add_flag("--in-pd", in_pd, "Matrix lies in PD_D");
  g_check->add_flag("--in-p", in_p, "Matrix lies in P_D");
  g_check->require_option(1);
  add_graph_opts(check, c, false);
  add_common_opts(check, c);
  check->add_flag("--relabel", c.relabel, "Renumber the DAG topologically");

  auto* inverse = app.add_subcommand("inverse", "Closed-form inverse of the completion");
  auto* det = app.add_subcommand("det", "Closed-form determinant of the inverse completion");
  for (auto* sub : {inverse, det}) {
    add_graph_opts(sub, c, true);
    add_common_opts(sub, c);
    sub->add_flag("--relabel", c.relabel, "Renumber the DAG topologically");
    sub->add_flag("--verbose,-v", c.verbose, "Per-family audit");
  }

  auto* counter = app.add_subcommand("counterexample", "Non-completable partial matrix");
  counter->add_option("--graph", c.graph_path, "DAG file")->required();
  counter->add_option("--epsilon", c.epsilon, "Value in (sqrt(2)/2, 1)")->required();
  counter->add_option("--out", c.out_path, "Write the matrix file here");
  add_common_opts(counter, c);
  counter->add_flag("--relabel", c.relabel, "Renumber the DAG topologically");

  auto* c4 = app.add_subcommand("c4", "Completability inequalities of the four-cycle");
  c4->add_option("values", c.c4_args, "a b c d")->expected(4)->required();
  add_common_opts(c4, c);

  auto* orient = app.add_subcommand("orientations", "All acyclic orientations of a graph");
  orient->add_option("--graph", c.graph_path, "Graph file")->required();
  add_common_opts(orient, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (complete->parsed()) c.command = Command::kComplete;
  if (check->parsed()) c.command = Command::kCheck;
  if (inverse->parsed()) c.command = Command::kInverse;
  if (det->parsed()) c.command = Command::kDet;
  if (counter->parsed()) c.command = Command::kCounterexample;
  if (c4->parsed()) c.command = Command::kC4;
  if (orient->parsed()) c.command = Command::kOrientations;
  c.space = space == "p" ? Space::kP : Space::kPd;
  if (perfect) c.check = CheckKind::kPerfect;
  if (decomposable) c.check = CheckKind::kDecomposable;
  if (qd) c.check = CheckKind::kQd;
  if (in_pd) c.check = CheckKind::kInPd;
  if (in_p) c.check = CheckKind::kInP;
  return execute(c, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"pdc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pdc::cli
