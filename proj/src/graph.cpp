#include "distspec/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "distspec/errors.hpp"

namespace distspec {

namespace {

std::string edge_text(std::size_t u, std::size_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) {
  if (n < 2) {
    throw InvalidArgument("graph order must be at least 2, got " + std::to_string(n));
  }
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge " + edge_text(e.u, e.v) + " has an endpoint outside 0.." +
                            std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw InvalidArgument("edge " + edge_text(e.u, e.v) + " is a loop");
    }
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::set<std::size_t> Graph::degree_set() const {
  std::set<std::size_t> out;
  for (const auto& list : adjacency_) out.insert(list.size());
  return out;
}

bool Graph::is_connected() const {
  std::vector<char> seen(order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order();
}

bool Graph::is_bipartite() const {
  std::vector<int> side(order(), -1);
  for (Vertex start = 0; start < order(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<Vertex> queue;
    queue.push(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : adjacency_[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, list);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const auto nh = static_cast<Vertex>(h.order());
  std::vector<Edge> edges;
  edges.reserve(g.size() * h.order() + h.size() * g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (const Edge& e : h.edges()) edges.push_back({u * nh + e.u, u * nh + e.v});
  }
  for (const Edge& e : g.edges()) {
    for (Vertex x = 0; x < nh; ++x) edges.push_back({e.u * nh + x, e.v * nh + x});
  }
  return Graph(g.order() * h.order(), edges);
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const auto nh = static_cast<Vertex>(h.order());
  std::vector<Edge> edges;
  edges.reserve(2 * g.size() * h.size());
  for (const Edge& e : g.edges()) {
    for (const Edge& f : h.edges()) {
      edges.push_back({e.u * nh + f.u, e.v * nh + f.v});
      edges.push_back({e.u * nh + f.v, e.v * nh + f.u});
    }
  }
  return Graph(g.order() * h.order(), edges);
}

Graph line_graph(const Graph& g) {
  const auto& base = g.edges();
  if (base.size() < 2) {
    throw InvalidArgument("line graph needs at least 2 edges, got " + std::to_string(base.size()));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < base.size(); ++i) {
    for (Vertex j = i + 1; j < base.size(); ++j) {
      const Edge& a = base[i];
      const Edge& b = base[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) edges.push_back({i, j});
    }
  }
  return Graph(base.size(), edges);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) {
    throw InvalidArgument("relabel: permutation has " + std::to_string(perm.size()) +
                          " entries for a graph of order " + std::to_string(g.order()));
  }
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p >= perm.size() || hit[p]) throw InvalidArgument("relabel: not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_content_line = [&](std::string& text) {
    while (std::getline(in, text)) {
      ++line_no;
      if (text.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto parse_pair = [&](const std::string& text, long long& a, long long& b) {
    std::istringstream fields(text);
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError(line_no, "expected two integers, got \"" + text + "\"");
    }
  };

  if (!next_content_line(line)) throw ParseError(line_no + 1, "missing header \"n m\"");
  long long n = 0;
  long long m = 0;
  parse_pair(line, n, m);
  if (n < 2) throw ParseError(line_no, "vertex count must be at least 2");
  if (m < 0) throw ParseError(line_no, "edge count must be non-negative");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(i));
    }
    long long u = 0;
    long long v = 0;
    parse_pair(line, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line_no, "edge " + edge_text(u, v) + " out of range");
    }
    if (u == v) throw ParseError(line_no, "edge " + edge_text(u, v) + " is a loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_content_line(line)) throw ParseError(line_no, "unexpected trailing content");
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace distspec
