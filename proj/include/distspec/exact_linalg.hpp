#pragma once

// Exact linear algebra over integer and rational matrices.
//
// The elimination kernels are templated on the Eigen expression so they run
// on any exact scalar (BigInt, BigRational); the IntSymMatrix overloads are
// the entry points used by the rest of the toolkit.

#include <cstddef>
#include <utility>
#include <vector>

#include "distspec/distance.hpp"
#include "distspec/scalar.hpp"

namespace distspec {

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  std::size_t dimension() const { return positive + zero + negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Ordered cells that partition 0..n-1.
class Partition {
 public:
  /// Throws InvalidArgument when a cell is empty, cells overlap, or some
  /// index in 0..n-1 is missing or out of range.
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> cells);

  static Partition singletons(std::size_t n);

  std::size_t universe() const { return n_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::size_t>& cell(std::size_t i) const { return cells_[i]; }

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> cells_;
};

struct QuotientMatrix {
  RationalMatrix matrix;
  bool equitable = false;
};

/// Fraction-free (Bareiss) determinant. Every division is exact, so any
/// integral domain scalar works.
template <typename Derived>
typename Derived::Scalar determinant_bareiss(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  DenseMatrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Rank by fraction-free row echelon reduction; works on rectangular input.
template <typename Derived>
std::size_t rank_bareiss(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(rank).swap(m.row(pivot));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / previous;
      }
      m(i, col) = 0;
    }
    previous = m(rank, col);
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

/// Inertia by symmetric congruence over the rationals, using 1x1 pivots on
/// nonzero diagonal entries and 2x2 pivots [[0, b], [b, 0]] otherwise.
Inertia inertia_congruence(const RationalMatrix& symmetric);

BigInt det_exact(const IntSymMatrix& m);
std::size_t rank_exact(const IntSymMatrix& m);
Inertia inertia_exact(const IntSymMatrix& m);

/// Multiplicity of the integer eigenvalue theta: n - rank(m - theta I).
std::size_t eigenvalue_multiplicity_exact(const IntSymMatrix& m, const BigInt& theta);

inline constexpr std::size_t kMinimalPolynomialMaxOrder = 256;

/// Degree of the minimal polynomial: the smallest d with I, m, ..., m^d
/// linearly dependent over Q. For a symmetric matrix this is the number of
/// distinct eigenvalues. Throws BudgetExceeded above order 256.
std::size_t distinct_eigenvalue_count(const IntSymMatrix& m);

/// Average block row sums; `equitable` is decided exactly.
QuotientMatrix quotient_matrix(const IntSymMatrix& m, const Partition& p);

}  // namespace distspec
