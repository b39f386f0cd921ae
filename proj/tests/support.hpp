#pragma once

// Test-only oracles, kept independent of the code they check.

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "distspec/bounds.hpp"
#include "distspec/graph.hpp"
#include "distspec/spectrum.hpp"

namespace distspec::testing {

/// Backtracking isomorphism test for small graphs.
inline bool isomorphic(const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  if (n != h.order() || g.size() != h.size()) return false;
  std::vector<std::size_t> dg(n), dh(n);
  for (Vertex v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto a = dg, b = dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(Vertex)> extend = [&](Vertex v) {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || dg[v] != dh[w]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == h.adjacent(static_cast<Vertex>(map[u]), w);
      if (!ok) continue;
      map[v] = static_cast<int>(w);
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  return extend(0);
}

/// Decodes a Prüfer sequence over 0..n-1 into its labeled tree.
inline Graph prufer_tree(const std::vector<Vertex>& code, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : code) ++degree[v];
  std::vector<Edge> edges;
  for (Vertex v : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, v});
    --degree[leaf];
    --degree[v];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.push_back({last[0], last[1]});
  return Graph(n, edges);
}

/// Number of unlabeled trees of order n, from all n^(n-2) Prüfer codes.
inline std::size_t prufer_tree_classes(std::size_t n) {
  std::set<std::string> classes;
  std::vector<Vertex> code(n - 2, 0);
  while (true) {
    classes.insert(tree_canonical_form(prufer_tree(code, n)));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return classes.size();
}

/// Eigen's own symmetric solver, descending.
inline std::vector<double> reference_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

/// Connected G(n, p) sample: a random spanning tree plus extra edges.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937& rng) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.push_back({u, v});
  return Graph(n, edges);
}

/// Paley graph on the field of prime order q = 1 mod 4.
inline Graph paley(Vertex q) {
  std::set<Vertex> squares;
  for (Vertex x = 1; x < q; ++x) squares.insert(x * x % q);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < q; ++u)
    for (Vertex v = u + 1; v < q; ++v)
      if (squares.count((v - u) % q)) edges.push_back({u, v});
  return Graph(q, edges);
}

/// Symplectic graph Sp(4, q), q prime: projective points of F_q^4, adjacent
/// when the standard alternating form is nonzero.
inline Graph symplectic4(Vertex q) {
  std::vector<std::array<Vertex, 4>> points;
  for (Vertex code = 1; code < q * q * q * q; ++code) {
    std::array<Vertex, 4> x{code % q, code / q % q, code / (q * q) % q, code / (q * q * q)};
    // Keep the representative whose last nonzero coordinate is 1.
    Vertex lead = 0;
    for (Vertex c : x)
      if (c != 0) lead = c;
    if (lead == 1) points.push_back(x);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < points.size(); ++u)
    for (Vertex v = u + 1; v < points.size(); ++v) {
      const auto& x = points[u];
      const auto& y = points[v];
      const Vertex form = (x[0] * y[1] + (q - 1) * x[1] * y[0] + x[2] * y[3] + (q - 1) * x[3] * y[2]) % q;
      if (form != 0) edges.push_back({u, v});
    }
  return Graph(points.size(), edges);
}

}  // namespace distspec::testing
