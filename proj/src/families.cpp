#include "distspec/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "distspec/errors.hpp"

namespace distspec {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::uint64_t checked_power(std::uint64_t base, int exponent, const char* family) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
    require(out <= kMaxOrder, std::string(family) + ": order exceeds " +
                                  std::to_string(kMaxOrder) + " vertices");
  }
  return out;
}

// Shrikhande connection set on Z4 x Z4.
constexpr std::array<std::array<int, 2>, 6> kShrikhandeSteps{
    {{0, 1}, {0, 3}, {1, 0}, {3, 0}, {1, 1}, {3, 3}}};

}  // namespace

std::vector<SubsetMask> subsets_of_size(int n, int r) {
  require(n >= 0 && n <= 62, "subset families need 0 <= n <= 62");
  require(r >= 0 && r <= n, "subset size must satisfy 0 <= r <= n");
  std::vector<SubsetMask> out;
  if (r == 0) return {0};
  const SubsetMask limit = SubsetMask{1} << n;
  // Gosper's hack: next larger mask with the same popcount.
  for (SubsetMask s = (SubsetMask{1} << r) - 1; s < limit;) {
    out.push_back(s);
    require(out.size() <= kMaxOrder, "subset family order exceeds " + std::to_string(kMaxOrder));
    SubsetMask c = s & (~s + 1);
    SubsetMask next = s + c;
    s = (((next ^ s) >> 2) / c) | next;
  }
  return out;
}

Graph complete(int n) {
  require(n >= 2, "complete(n) needs n >= 2");
  require(static_cast<std::uint64_t>(n) <= 1 << 14, "complete(n) needs n <= 16384");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  require(static_cast<std::uint64_t>(n) <= kMaxOrder, "cycle(n) order too large");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph path(int n) {
  require(n >= 2, "path(n) needs n >= 2");
  require(static_cast<std::uint64_t>(n) <= kMaxOrder, "path(n) order too large");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < static_cast<Vertex>(n); ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph hypercube(int d) {
  require(d >= 1, "hypercube(d) needs d >= 1");
  const auto n = checked_power(2, d, "hypercube");
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (int bit = 0; bit < d; ++bit) {
      Vertex y = x ^ (Vertex{1} << bit);
      if (x < y) edges.push_back({x, y});
    }
  }
  return Graph(n, edges);
}

Graph hamming(int d, int n) {
  require(d >= 1, "hamming(d,n) needs d >= 1");
  require(n >= 2, "hamming(d,n) needs n >= 2");
  const auto order = checked_power(static_cast<std::uint64_t>(n), d, "hamming");
  std::vector<Edge> edges;
  // Coordinate 0 is the most significant digit, matching iterated products.
  for (std::uint64_t x = 0; x < order; ++x) {
    std::uint64_t place = 1;
    for (int c = 0; c < d; ++c, place *= n) {
      const std::uint64_t digit = (x / place) % n;
      for (std::uint64_t other = digit + 1; other < static_cast<std::uint64_t>(n); ++other) {
        edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(x + (other - digit) * place)});
      }
    }
  }
  return Graph(order, edges);
}

Graph shrikhande() {
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (auto [da, db] : kShrikhandeSteps) {
        const int c = (a + da) % 4;
        const int e = (b + db) % 4;
        edges.push_back({static_cast<Vertex>(4 * a + b), static_cast<Vertex>(4 * c + e)});
      }
    }
  }
  return Graph(16, edges);
}

Graph doob(int m, int d) {
  require(m >= 1, "doob(m,d) needs m >= 1");
  require(d >= 0, "doob(m,d) needs d >= 0");
  const auto order = checked_power(4, 2 * m + d, "doob");
  // Digits, least significant first: d letters of Z4, then m Shrikhande
  // pairs stored as (a, b) with a the more significant digit.
  std::vector<Edge> edges;
  std::vector<int> digit(2 * m + d);
  for (std::uint64_t x = 0; x < order; ++x) {
    std::uint64_t rest = x;
    for (int& g : digit) {
      g = static_cast<int>(rest % 4);
      rest /= 4;
    }
    auto emit = [&](const std::vector<int>& y) {
      std::uint64_t index = 0;
      for (int i = static_cast<int>(y.size()) - 1; i >= 0; --i) index = index * 4 + y[i];
      if (index > x) edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(index)});
    };
    for (int c = 0; c < d; ++c) {
      for (int letter = 0; letter < 4; ++letter) {
        if (letter == digit[c]) continue;
        auto y = digit;
        y[c] = letter;
        emit(y);
      }
    }
    for (int f = 0; f < m; ++f) {
      const int lo = d + 2 * f;  // b digit
      const int hi = lo + 1;     // a digit
      for (auto [da, db] : kShrikhandeSteps) {
        auto y = digit;
        y[hi] = (digit[hi] + da) % 4;
        y[lo] = (digit[lo] + db) % 4;
        emit(y);
      }
    }
  }
  return Graph(order, edges);
}

Graph johnson(int n, int r) {
  require(r >= 1 && r < n, "johnson(n,r) needs 1 <= r < n");
  const auto vertices = subsets_of_size(n, r);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex j = i + 1; j < vertices.size(); ++j) {
      if (std::popcount(vertices[i] & vertices[j]) == r - 1) edges.push_back({i, j});
    }
  }
  return Graph(vertices.size(), edges);
}

Graph kneser(int n, int r) {
  require(r >= 1 && r < n, "kneser(n,r) needs 1 <= r < n");
  const auto vertices = subsets_of_size(n, r);
  require(vertices.size() >= 2, "kneser(n,r) needs at least two vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex j = i + 1; j < vertices.size(); ++j) {
      if ((vertices[i] & vertices[j]) == 0) edges.push_back({i, j});
    }
  }
  return Graph(vertices.size(), edges);
}

Graph odd_graph(int r) {
  require(r >= 1, "odd_graph(r) needs r >= 1");
  return kneser(2 * r + 1, r);
}

Graph double_odd(int r) {
  require(r >= 1, "double_odd(r) needs r >= 1");
  const int n = 2 * r + 1;
  const auto small = subsets_of_size(n, r);
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  const auto count = static_cast<Vertex>(small.size());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < count; ++i) {
    for (Vertex j = 0; j < count; ++j) {
      const SubsetMask big = full & ~small[j];
      if ((small[i] & big) == small[i]) edges.push_back({i, count + j});
    }
  }
  return Graph(2 * small.size(), edges);
}

Graph halved_cube(int d) {
  require(d >= 2, "halved_cube(d) needs d >= 2");
  const auto n = checked_power(2, d - 1, "halved_cube");
  // Even-weight masks in ascending order; mask x has index x >> 1.
  std::vector<Edge> edges;
  for (SubsetMask x = 0; x < (SubsetMask{1} << d); ++x) {
    if (std::popcount(x) % 2 != 0) continue;
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        const SubsetMask y = x ^ (SubsetMask{1} << a) ^ (SubsetMask{1} << b);
        if (x < y) edges.push_back({static_cast<Vertex>(x >> 1), static_cast<Vertex>(y >> 1)});
      }
    }
  }
  return Graph(n, edges);
}

Graph cocktail_party(int m) {
  require(m >= 1, "cocktail_party(m) needs m >= 1");
  require(m <= 1 << 13, "cocktail_party(m) needs m <= 8192");
  const auto n = static_cast<Vertex>(2 * m);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u / 2 != v / 2) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph lollipop(int k, int l) {
  require(k >= 2, "lollipop(k,l) needs k >= 2");
  require(l >= 0, "lollipop(k,l) needs l >= 0");
  const auto kk = static_cast<Vertex>(k);
  const auto n = static_cast<Vertex>(k + l);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < kk; ++u)
    for (Vertex v = u + 1; v < kk; ++v) edges.push_back({u, v});
  for (Vertex v = kk - 1; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph barbell(int k, int l) { return generalized_barbell(k, k, l); }

Graph generalized_barbell(int k, int m, int l) {
  require(k >= 2 && m >= 2, "generalized_barbell(k,m,l) needs k, m >= 2");
  require(l >= 0, "generalized_barbell(k,m,l) needs l >= 0");
  const auto kk = static_cast<Vertex>(k);
  const auto mm = static_cast<Vertex>(m);
  const auto ll = static_cast<Vertex>(l);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < kk; ++u)
    for (Vertex v = u + 1; v < kk; ++v) edges.push_back({u, v});
  for (Vertex u = kk; u < kk + mm; ++u)
    for (Vertex v = u + 1; v < kk + mm; ++v) edges.push_back({u, v});
  if (l == 0) {
    edges.push_back({kk - 1, kk + mm - 1});
  } else {
    for (Vertex v = kk + mm; v + 1 < kk + mm + ll; ++v) edges.push_back({v, v + 1});
    edges.push_back({kk - 1, kk + mm});
    edges.push_back({kk + mm - 1, kk + mm + ll - 1});
  }
  return Graph(kk + mm + ll, edges);
}

Graph hypercube_with_leaf(int d) {
  const Graph cube = hypercube(d);
  auto edges = cube.edges();
  const auto leaf = static_cast<Vertex>(cube.order());
  edges.push_back({0, leaf});
  return Graph(cube.order() + 1, edges);
}

Graph petersen() { return kneser(5, 2); }

Graph icosahedron() {
  return make_graph(12, {{0, 1},  {0, 5},  {0, 7},  {0, 8},  {0, 11}, {1, 2},  {1, 5},  {1, 6},
                         {1, 8},  {2, 3},  {2, 6},  {2, 8},  {2, 9},  {3, 4},  {3, 6},  {3, 9},
                         {3, 10}, {4, 5},  {4, 6},  {4, 10}, {4, 11}, {5, 6},  {5, 11}, {7, 8},
                         {7, 9},  {7, 10}, {7, 11}, {8, 9},  {9, 10}, {10, 11}});
}

Graph dodecahedron() {
  return make_graph(20, {{0, 1},   {0, 10},  {0, 19},  {1, 2},   {1, 8},   {2, 3},   {2, 6},
                         {3, 4},   {3, 19},  {4, 5},   {4, 17},  {5, 6},   {5, 15},  {6, 7},
                         {7, 8},   {7, 14},  {8, 9},   {9, 10},  {9, 13},  {10, 11}, {11, 12},
                         {11, 18}, {12, 13}, {12, 16}, {13, 14}, {14, 15}, {15, 16}, {16, 17},
                         {17, 18}, {18, 19}});
}

}  // namespace distspec
