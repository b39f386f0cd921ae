#pragma once

// Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "distspec/distance.hpp"
#include "distspec/errors.hpp"
#include "distspec/spectrum.hpp"

namespace distspec {

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr std::size_t kNumericMaxOrder = 1500;

/// All eigenvalues of a symmetric matrix, sorted descending.
///
/// Sweeps rotate away every off-diagonal pair in row order until the
/// off-diagonal Frobenius norm drops below tol * ||m||_F; each eigenvalue is
/// then within that norm of a diagonal entry. Input asymmetry above
/// tol * max(1, max |m_ij|) is rejected with its location.
template <typename Derived>
std::vector<typename Derived::Scalar> sym_eigenvalues(const Eigen::MatrixBase<Derived>& input,
                                                      typename Derived::Scalar tol = kDefaultEigenTolerance) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::sqrt;
  if (input.rows() != input.cols()) throw InvalidArgument("eigenvalues need a square matrix");
  if (!(tol > Scalar(0))) throw InvalidArgument("eigen tolerance must be positive");
  const Eigen::Index n = input.rows();

  DenseMatrix<Scalar> a = input;
  const Scalar scale = std::max(Scalar(1), a.cwiseAbs().maxCoeff());
  Eigen::Index worst_i = 0;
  Eigen::Index worst_j = 0;
  Scalar worst = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j + 1; i < n; ++i) {
      const Scalar gap = abs(a(i, j) - a(j, i));
      if (gap > worst) {
        worst = gap;
        worst_i = i;
        worst_j = j;
      }
    }
  }
  if (worst > tol * scale) {
    throw InvalidArgument("matrix is not symmetric: largest asymmetry " + std::to_string(static_cast<double>(worst)) +
                          " at (" + std::to_string(worst_i) + "," + std::to_string(worst_j) + ")");
  }
  a = (a + a.transpose()).eval() / Scalar(2);

  const Scalar threshold = tol * a.norm();
  auto off_norm = [&a, n]() {
    Scalar sum = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) sum += a(i, j) * a(i, j);
    return sqrt(sum);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= threshold; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        Scalar t = Scalar(1) / (abs(theta) + sqrt(theta * theta + Scalar(1)));
        if (theta < Scalar(0)) t = -t;
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        const Scalar tau = s / (Scalar(1) + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        auto col_p = a.col(p);
        auto col_q = a.col(q);
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Scalar g = col_p(r);
          const Scalar h = col_q(r);
          col_p(r) = g - s * (h + g * tau);
          col_q(r) = h + s * (g - h * tau);
        }
        a.row(p).transpose() = col_p;
        a.row(q).transpose() = col_q;
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
      }
    }
  }

  std::vector<Scalar> values(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

/// Default clustering tolerance 1e-6 * max(1, spectral radius).
double default_cluster_tolerance(const std::vector<double>& descending);

/// Jacobi eigenvalues of m, clustered. cluster_tol <= 0 selects the default.
Spectrum numeric_spectrum(const IntSymMatrix& m, double tol = kDefaultEigenTolerance, double cluster_tol = 0.0);

}  // namespace distspec
