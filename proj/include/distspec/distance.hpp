#pragma once

// All-pairs BFS distances and the symmetric integer matrices they produce.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/scalar.hpp"

namespace distspec {

/// Dense symmetric matrix over arbitrary-precision integers.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  /// Throws InvalidArgument when m is not square and symmetric.
  explicit IntSymMatrix(IntMatrix m);

  static IntSymMatrix zero(std::size_t n);

  std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }

  /// Writes the (i, j) and (j, i) entries together.
  void set(std::size_t i, std::size_t j, const BigInt& value);

  Eigen::MatrixXd to_double() const { return m_.cast<double>(); }
  IntSymMatrix shifted(const BigInt& diagonal_shift) const;

  friend bool operator==(const IntSymMatrix& a, const IntSymMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  IntMatrix m_;
};

/// BFS distances; throws DisconnectedGraph naming an unreachable pair.
IntSymMatrix distance_matrix(const Graph& g);

/// Small-integer distances from one BFS per vertex, -1 for unreachable.
std::vector<std::vector<int>> bfs_distances(const Graph& g);

int diameter(const Graph& g);

struct TransmissionProfile {
  std::vector<BigInt> row_sums;
  bool regular = false;
};

TransmissionProfile transmission_profile(const Graph& g);

/// True when the matrix has zero diagonal, positive off-diagonal entries
/// and satisfies the triangle inequality.
bool satisfies_distance_axioms(const IntSymMatrix& d);

// Matrix dump: "n" then n lines of n space-separated integers.
void write_matrix(std::ostream& out, const IntSymMatrix& m);
IntSymMatrix read_matrix(std::istream& in);

}  // namespace distspec
