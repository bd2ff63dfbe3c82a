#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

Dense to_dense(const pdc::SymMatrix& m) {
  Dense a(m.dim(), std::vector<double>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) a[i][j] = m(i + 1, j + 1);
  return a;
}

pdc::SymMatrix from_dense(const Dense& a) {
  const int n = static_cast<int>(a.size());
  pdc::SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m.set(i + 1, j + 1, 0.5 * (a[i][j] + a[j][i]));
  return m;
}

std::vector<double> jacobi_eigenvalues(const pdc::SymMatrix& m) {
  Dense a = to_dense(m);
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        total += a[i][j] * a[i][j];
        if (i != j) off += a[i][j] * a[i][j];
      }
    if (off <= 1e-30 * std::max(total, 1e-300)) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

double cofactor_determinant(const Dense& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1.0;
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  double det = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col] == 0.0) continue;
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    det += (col % 2 == 0 ? 1.0 : -1.0) * a[0][col] * cofactor_determinant(minor);
  }
  return det;
}

Dense gauss_jordan_inverse(const Dense& a) {
  const int n = static_cast<int>(a.size());
  Dense aug(n, std::vector<double>(2 * n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1.0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
    if (aug[piv][col] == 0.0) throw std::runtime_error("singular");
    std::swap(aug[piv], aug[col]);
    const double d = aug[col][col];
    for (double& v : aug[col]) v /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0.0) continue;
      const double f = aug[r][col];
      for (int k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[col][k];
    }
  }
  Dense inv(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  Dense c(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Dense transpose(const Dense& a) {
  if (a.empty()) return {};
  Dense t(a[0].size(), std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

bool sylvester_pd(const Dense& a) {
  for (std::size_t k = 1; k <= a.size(); ++k) {
    Dense lead(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
    if (!(cofactor_determinant(lead) > 0.0)) return false;
  }
  return true;
}

namespace {

std::int64_t chromatic(int n, const std::set<std::pair<int, int>>& edges, std::int64_t x) {
  if (edges.empty()) {
    std::int64_t r = 1;
    for (int k = 0; k < n; ++k) r *= x;
    return r;
  }
  const auto [u, v] = *edges.begin();  // u < v
  std::set<std::pair<int, int>> deleted = edges;
  deleted.erase(deleted.begin());
  std::set<std::pair<int, int>> contracted;
  for (auto [a, b] : deleted) {
    int a2 = a == v ? u : a;
    int b2 = b == v ? u : b;
    // Renumber vertices above v down by one so ids stay in 0..n-2.
    if (a2 > v) --a2;
    if (b2 > v) --b2;
    if (a2 == b2) continue;
    contracted.insert({std::min(a2, b2), std::max(a2, b2)});
  }
  return chromatic(n, deleted, x) - chromatic(n - 1, contracted, x);
}

}  // namespace

std::int64_t chromatic_polynomial(const pdc::UGraph& g, std::int64_t x) {
  std::set<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges()) edges.insert({j - 1, i - 1});
  return chromatic(g.size(), edges, x);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

pdc::Dag random_dag(Rng& rng, int p, double edge_prob) {
  std::vector<pdc::Edge> edges;
  for (int i = 2; i <= p; ++i)
    for (int j = 1; j < i; ++j)
      if (uniform(rng, 0, 1) < edge_prob) edges.emplace_back(i, j);
  return pdc::Dag(p, edges);
}

pdc::Dag random_perfect_dag(Rng& rng, int p, double edge_prob) {
  std::vector<std::vector<char>> adj(p + 1, std::vector<char>(p + 1, 0));
  std::vector<pdc::Edge> edges;
  for (int j = p - 1; j >= 1; --j) {
    std::vector<int> candidates;
    for (int i = j + 1; i <= p; ++i) candidates.push_back(i);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::vector<int> parents;
    for (int i : candidates) {
      if (uniform(rng, 0, 1) >= edge_prob) continue;
      bool ok = true;
      for (int q : parents) ok = ok && adj[i][q];
      if (ok) parents.push_back(i);
    }
    for (int i : parents) {
      edges.emplace_back(i, j);
      adj[i][j] = adj[j][i] = 1;
    }
  }
  return pdc::Dag(p, edges);
}

pdc::Dag random_non_perfect_dag(Rng& rng, int p, double edge_prob) {
  if (p < 3) throw std::invalid_argument("need p >= 3");
  for (;;) {
    pdc::Dag d = random_dag(rng, p, edge_prob);
    if (!pdc::is_perfect(d)) return d;
  }
}

LdlSample random_ld_member(Rng& rng, const pdc::Dag& d) {
  const int p = d.size();
  LdlSample s;
  s.lower.assign(p, std::vector<double>(p, 0.0));
  for (int i = 0; i < p; ++i) s.lower[i][i] = 1.0;
  for (auto [i, j] : d.edges()) s.lower[i - 1][j - 1] = uniform(rng, -0.8, 0.8);
  s.lambda.resize(p);
  for (double& l : s.lambda) l = uniform(rng, 0.5, 2.0);

  // M = L^{-1}, unit lower triangular.
  Dense m(p, std::vector<double>(p, 0.0));
  for (int j = 0; j < p; ++j) {
    m[j][j] = 1.0;
    for (int i = j + 1; i < p; ++i) {
      double acc = 0.0;
      for (int k = j; k < i; ++k) acc += s.lower[i][k] * m[k][j];
      m[i][j] = -acc;
    }
  }
  s.omega = pdc::SymMatrix(p);
  s.sigma = pdc::SymMatrix(p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j <= i; ++j) {
      double w = 0.0;
      for (int k = 0; k <= j; ++k) w += s.lower[i][k] * s.lambda[k] * s.lower[j][k];
      s.omega.set(i + 1, j + 1, w);
      double v = 0.0;
      for (int k = i; k < p; ++k) v += m[k][i] * m[k][j] / s.lambda[k];
      s.sigma.set(i + 1, j + 1, v);
    }
  }
  return s;
}

pdc::SymMatrix random_spd(Rng& rng, int p) {
  Dense a(p, std::vector<double>(p));
  for (auto& row : a)
    for (double& v : row) v = uniform(rng, -1, 1);
  Dense g = multiply(a, transpose(a));
  for (int i = 0; i < p; ++i) g[i][i] += 0.1 * p;
  return from_dense(g);
}

pdc::SymMatrix random_symmetric(Rng& rng, int p) {
  pdc::SymMatrix m(p);
  const double shift = uniform(rng, -1.0, 3.0);
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= i; ++j) m.set(i, j, uniform(rng, -1, 1) + (i == j ? shift : 0.0));
  return m;
}

pdc::UGraph random_decomposable_graph(Rng& rng, int p, double edge_prob) {
  const pdc::Dag d = random_perfect_dag(rng, p, edge_prob);
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<pdc::Edge> edges;
  for (auto [i, j] : d.edges()) edges.emplace_back(perm[i - 1], perm[j - 1]);
  return pdc::UGraph(p, edges);
}

pdc::UGraph random_ugraph(Rng& rng, int p, double edge_prob) {
  std::vector<pdc::Edge> edges;
  for (int i = 2; i <= p; ++i)
    for (int j = 1; j < i; ++j)
      if (uniform(rng, 0, 1) < edge_prob) edges.emplace_back(i, j);
  return pdc::UGraph(p, edges);
}

pdc::PartialMatrix restrict_to_dag(const pdc::SymMatrix& sigma, const pdc::Dag& d) {
  return pdc::PartialMatrix::restrict_to_pattern(sigma, pdc::undirected_version(d));
}

double max_abs_diff(const pdc::SymMatrix& a, const pdc::SymMatrix& b) {
  double worst = 0.0;
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = 1; j <= a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

bool c4_grid_has_pd_completion(double a, double b, double c, double d, double step) {
  const int n = static_cast<int>(std::floor(2.0 / step));
  for (int s = 1; s < n; ++s) {
    const double x = -1.0 + s * step;  // Sigma_14
    for (int t = 1; t < n; ++t) {
      const double y = -1.0 + t * step;  // Sigma_23
      const Dense m{{1, a, d, x}, {a, 1, y, b}, {d, y, 1, c}, {x, b, c, 1}};
      if (sylvester_pd(m)) return true;
    }
  }
  return false;
}

}  // namespace oracle
