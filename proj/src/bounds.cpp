#include "distspec/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <thread>

#include "distspec/distance.hpp"
#include "distspec/errors.hpp"
#include "distspec/exact_linalg.hpp"

namespace distspec {

namespace {

std::vector<VertexMask> neighbour_masks(const Graph& g) {
  if (g.order() > 64) throw BudgetExceeded("vertex masks hold at most 64 vertices");
  std::vector<VertexMask> masks(g.order(), 0);
  for (const Edge& e : g.edges()) {
    masks[e.u] |= VertexMask{1} << e.v;
    masks[e.v] |= VertexMask{1} << e.u;
  }
  return masks;
}

VertexMask all_vertices(std::size_t n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

VertexMask closure(const std::vector<VertexMask>& neighbours, VertexMask blue) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < neighbours.size(); ++v) {
      if (!(blue >> v & 1)) continue;
      const VertexMask white = neighbours[v] & ~blue;
      if (white != 0 && std::has_single_bit(white)) {
        blue |= white;
        changed = true;
      }
    }
  }
  return blue;
}

// Centers of a tree: the last one or two vertices left by leaf peeling.
std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string encode(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) children.push_back(encode(t, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

}  // namespace

VertexMask forcing_closure(const Graph& g, VertexMask blue) {
  return closure(neighbour_masks(g), blue & all_vertices(g.order()));
}

std::size_t zero_forcing_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kZeroForcingMaxOrder) {
    throw BudgetExceeded("zero forcing search is limited to order " + std::to_string(kZeroForcingMaxOrder) +
                         ", got " + std::to_string(n));
  }
  const auto neighbours = neighbour_masks(g);
  const VertexMask full = all_vertices(n);
  for (std::size_t size = 1; size < n; ++size) {
    // Gosper's hack over all masks of this popcount.
    VertexMask s = (VertexMask{1} << size) - 1;
    while (s <= full) {
      if (closure(neighbours, s) == full) return size;
      const VertexMask c = s & -s;
      const VertexMask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n;
}

BigRational zf_eigenvalue_bound(const Graph& g) {
  if (!g.is_connected()) throw InvalidArgument("zf_eigenvalue_bound needs a connected graph");
  const std::size_t z = zero_forcing_number(complement(g));
  return BigRational(BigInt(g.order() - 1), BigInt(z + 1)) + 1;
}

std::string tree_canonical_form(const Graph& tree) {
  if (!tree.is_tree()) throw InvalidArgument("tree_canonical_form needs a tree");
  std::string best;
  for (Vertex c : tree_centers(tree)) {
    std::string code = encode(tree, c, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 2 || n > kTreeMaxOrder) {
    throw BudgetExceeded("tree enumeration covers orders 2.." + std::to_string(kTreeMaxOrder) + ", got " +
                         std::to_string(n));
  }
  // Every tree of order n is a tree of order n-1 plus a leaf.
  std::map<std::string, Graph> level;
  const Graph edge(2, {{0, 1}});
  level.emplace(tree_canonical_form(edge), edge);
  for (int order = 3; order <= n; ++order) {
    std::map<std::string, Graph> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({v, static_cast<Vertex>(t.order())});
        Graph grown(t.order() + 1, edges);
        next.try_emplace(tree_canonical_form(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

void for_each_tree(int n, const std::function<void(const Graph&)>& visit) {
  for (const Graph& t : enumerate_trees(n)) visit(t);
}

TreeBoundCheck check_tree_bounds(const Graph& t) {
  if (!t.is_tree()) throw InvalidArgument("check_tree_bounds needs a tree");
  TreeBoundCheck out;
  out.distinct_eigenvalues = distinct_eigenvalue_count(distance_matrix(t));
  out.diameter = diameter(t);
  const auto q = static_cast<std::int64_t>(out.distinct_eigenvalues);
  out.strong_holds = q >= out.diameter + 1;
  out.weak_holds = q >= out.diameter / 2;
  out.ceiling_holds = q >= (out.diameter + 1) / 2;
  return out;
}

std::vector<TreeOrderSummary> verify_trees(int max_order, unsigned workers) {
  if (max_order < 2 || max_order > kTreeMaxOrder) {
    throw BudgetExceeded("tree verification covers orders 2.." + std::to_string(kTreeMaxOrder));
  }
  workers = std::max(1u, workers);
  std::vector<TreeOrderSummary> summaries;
  for (int n = 2; n <= max_order; ++n) {
    const std::vector<Graph> trees = enumerate_trees(n);
    std::vector<TreeBoundCheck> checks(trees.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t i = cursor++; i < trees.size(); i = cursor++) checks[i] = check_tree_bounds(trees[i]);
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    TreeOrderSummary s;
    s.order = n;
    s.trees = trees.size();
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (!checks[i].strong_holds) {
        ++s.strong_violations;
        s.counterexamples.push_back(trees[i]);
      }
      if (!checks[i].weak_holds) ++s.weak_violations;
      if (!checks[i].ceiling_holds) ++s.ceiling_violations;
    }
    summaries.push_back(std::move(s));
  }
  return summaries;
}

}  // namespace distspec
