#include "distspec/distance.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "distspec/errors.hpp"

namespace distspec {

IntSymMatrix::IntSymMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw InvalidArgument("matrix is " + std::to_string(m_.rows()) + "x" +
                          std::to_string(m_.cols()) + ", expected square");
  }
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m_.cols(); ++j) {
      if (m_(i, j) != m_(j, i)) {
        throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  }
}

IntSymMatrix IntSymMatrix::zero(std::size_t n) {
  IntSymMatrix out;
  out.m_ = IntMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  return out;
}

void IntSymMatrix::set(std::size_t i, std::size_t j, const BigInt& value) {
  m_(i, j) = value;
  m_(j, i) = value;
}

IntSymMatrix IntSymMatrix::shifted(const BigInt& diagonal_shift) const {
  IntSymMatrix out = *this;
  for (Eigen::Index i = 0; i < m_.rows(); ++i) out.m_(i, i) += diagonal_shift;
  return out;
}

std::vector<std::vector<int>> bfs_distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<Vertex> frontier;
  std::vector<Vertex> next;
  for (Vertex s = 0; s < n; ++s) {
    auto& row = dist[s];
    row[s] = 0;
    frontier.assign(1, s);
    for (int level = 1; !frontier.empty(); ++level) {
      next.clear();
      for (Vertex v : frontier) {
        for (Vertex w : g.neighbors(v)) {
          if (row[w] < 0) {
            row[w] = level;
            next.push_back(w);
          }
        }
      }
      frontier.swap(next);
    }
  }
  return dist;
}

namespace {

std::vector<std::vector<int>> connected_distances(const Graph& g) {
  auto dist = bfs_distances(g);
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (dist[0][v] < 0) throw DisconnectedGraph(0, v);
  }
  return dist;
}

}  // namespace

IntSymMatrix distance_matrix(const Graph& g) {
  const auto dist = connected_distances(g);
  const std::size_t n = g.order();
  IntSymMatrix out = IntSymMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.set(i, j, dist[i][j]);
  return out;
}

int diameter(const Graph& g) {
  int best = 0;
  for (const auto& row : connected_distances(g)) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

TransmissionProfile transmission_profile(const Graph& g) {
  TransmissionProfile out;
  for (const auto& row : connected_distances(g)) {
    BigInt sum = 0;
    for (int d : row) sum += d;
    out.row_sums.push_back(sum);
  }
  out.regular = std::adjacent_find(out.row_sums.begin(), out.row_sums.end(),
                                   std::not_equal_to<>()) == out.row_sums.end();
  return out;
}

bool satisfies_distance_axioms(const IntSymMatrix& d) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && d(i, j) <= 0) return false;
      if (d(i, j) != d(j, i)) return false;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d(i, j) > d(i, k) + d(k, j)) return false;
  return true;
}

void write_matrix(std::ostream& out, const IntSymMatrix& m) {
  const std::size_t n = m.size();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

IntSymMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(1, "missing dimension line");
  long long n = 0;
  {
    std::istringstream fields(line);
    std::string extra;
    if (!(fields >> n) || (fields >> extra) || n < 1) {
      throw ParseError(line_no, "expected a positive dimension, got \"" + line + "\"");
    }
  }
  IntMatrix m(n, n);
  for (long long i = 0; i < n; ++i) {
    if (!next_line()) throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rows");
    std::istringstream fields(line);
    std::string token;
    long long j = 0;
    while (fields >> token) {
      if (j >= n) throw ParseError(line_no, "row has more than " + std::to_string(n) + " entries");
      try {
        m(i, j) = BigInt(token);
      } catch (const std::exception&) {
        throw ParseError(line_no, "not an integer: \"" + token + "\"");
      }
      ++j;
    }
    if (j != n) throw ParseError(line_no, "row has " + std::to_string(j) + " entries, expected " + std::to_string(n));
  }
  if (next_line()) throw ParseError(line_no, "unexpected trailing content");
  try {
    return IntSymMatrix(std::move(m));
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace distspec
