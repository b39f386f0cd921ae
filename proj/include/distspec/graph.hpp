#pragma once

// Simple undirected graphs on vertices 0..n-1 and the graph operations used
// to build the families (complement, cartesian/tensor products, line graph).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace distspec {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph with at least two vertices.
///
/// Edges are stored normalized (u < v), sorted and deduplicated; adjacency
/// lists are sorted ascending.
class Graph {
 public:
  /// Throws InvalidArgument on n < 2, a loop, or an out-of-range endpoint
  /// (the message quotes the offending edge).
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Sorted set of distinct vertex degrees.
  std::set<std::size_t> degree_set() const;
  bool is_regular() const { return degree_set().size() == 1; }
  bool is_connected() const;
  bool is_bipartite() const;
  bool is_tree() const { return is_connected() && size() + 1 == order(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

Graph complement(const Graph& g);

/// Vertex (u, u') of the product has index u * h.order() + u'.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph tensor_product(const Graph& g, const Graph& h);

/// One vertex per edge of g, indexed in g.edges() order. Needs >= 2 edges.
Graph line_graph(const Graph& g);

/// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Text edge-list format: "n m" then m lines "u v", 0-indexed, normalized
// ascending. The reader reports the 1-based line of the first problem.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace distspec
