#include "distspec/exact_linalg.hpp"

#include <algorithm>
#include <string>

#include "distspec/errors.hpp"

namespace distspec {

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> cells)
    : n_(n), cells_(std::move(cells)) {
  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (cells_[c].empty()) throw InvalidArgument("partition cell " + std::to_string(c) + " is empty");
    for (std::size_t x : cells_[c]) {
      if (x >= n) {
        throw InvalidArgument("partition cell " + std::to_string(c) + " contains " +
                              std::to_string(x) + ", outside 0.." + std::to_string(n - 1));
      }
      if (seen[x]) throw InvalidArgument("index " + std::to_string(x) + " appears in two partition cells");
      seen[x] = 1;
      ++covered;
    }
  }
  if (covered != n) {
    const auto missing = std::find(seen.begin(), seen.end(), 0) - seen.begin();
    throw InvalidArgument("partition does not cover index " + std::to_string(missing));
  }
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::vector<std::size_t>> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = {i};
  return Partition(n, std::move(cells));
}

Inertia inertia_congruence(const RationalMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw InvalidArgument("inertia needs a square matrix");
  RationalMatrix a = symmetric;
  const Eigen::Index n = a.rows();
  std::vector<Eigen::Index> active(n);
  for (Eigen::Index i = 0; i < n; ++i) active[i] = i;

  Inertia out;
  auto count = [&out](int sign) {
    if (sign > 0) ++out.positive;
    else if (sign < 0) ++out.negative;
    else ++out.zero;
  };
  auto drop = [&active](Eigen::Index idx) {
    active.erase(std::find(active.begin(), active.end(), idx));
  };

  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(),
                             [&a](Eigen::Index i) { return a(i, i) != 0; });
    if (diag != active.end()) {
      const Eigen::Index p = *diag;
      const BigRational pivot = a(p, p);
      count(pivot.sign());
      drop(p);
      for (Eigen::Index r : active) {
        if (a(r, p) == 0) continue;
        const BigRational factor = a(r, p) / pivot;
        for (Eigen::Index s : active) a(r, s) -= factor * a(p, s);
      }
      continue;
    }

    Eigen::Index pi = -1;
    Eigen::Index pj = -1;
    for (std::size_t x = 0; x < active.size() && pi < 0; ++x) {
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        if (a(active[x], active[y]) != 0) {
          pi = active[x];
          pj = active[y];
          break;
        }
      }
    }
    if (pi < 0) {
      out.zero += active.size();
      break;
    }
    // The block [[0, b], [b, 0]] has one positive and one negative eigenvalue.
    const BigRational b = a(pi, pj);
    count(+1);
    count(-1);
    drop(pi);
    drop(pj);
    std::vector<BigRational> ci(active.size());
    std::vector<BigRational> cj(active.size());
    for (std::size_t x = 0; x < active.size(); ++x) {
      ci[x] = a(active[x], pi);
      cj[x] = a(active[x], pj);
    }
    for (std::size_t x = 0; x < active.size(); ++x) {
      if (ci[x] == 0 && cj[x] == 0) continue;
      for (std::size_t y = 0; y < active.size(); ++y) {
        a(active[x], active[y]) -= (ci[x] * cj[y] + cj[x] * ci[y]) / b;
      }
    }
  }
  return out;
}

BigInt det_exact(const IntSymMatrix& m) { return determinant_bareiss(m.matrix()); }

std::size_t rank_exact(const IntSymMatrix& m) { return rank_bareiss(m.matrix()); }

Inertia inertia_exact(const IntSymMatrix& m) {
  return inertia_congruence(m.matrix().cast<BigRational>());
}

std::size_t eigenvalue_multiplicity_exact(const IntSymMatrix& m, const BigInt& theta) {
  return m.size() - rank_exact(m.shifted(-theta));
}

namespace {

// Upper triangle of a symmetric matrix, row by row.
DenseVector<BigInt> flatten_upper(const IntMatrix& p) {
  const Eigen::Index n = p.rows();
  DenseVector<BigInt> v(n * (n + 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) v(k++) = p(i, j);
  return v;
}

void divide_by_content(DenseVector<BigInt>& v) {
  BigInt g = 0;
  for (Eigen::Index i = 0; i < v.size() && g != 1; ++i) {
    if (v(i) != 0) g = gcd(g, v(i));
  }
  if (g > 1) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  }
}

struct EchelonRow {
  DenseVector<BigInt> values;
  Eigen::Index pivot;
};

// Reduces v against the echelon rows; returns true when v becomes zero.
bool reduce(DenseVector<BigInt>& v, const std::vector<EchelonRow>& basis) {
  for (const EchelonRow& row : basis) {
    if (v(row.pivot) == 0) continue;
    const BigInt scale_v = row.values(row.pivot);
    const BigInt scale_row = v(row.pivot);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (row.values(i) == 0) {
        if (v(i) != 0) v(i) *= scale_v;
      } else {
        v(i) = v(i) * scale_v - scale_row * row.values(i);
      }
    }
    divide_by_content(v);
  }
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

}  // namespace

std::size_t distinct_eigenvalue_count(const IntSymMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMinimalPolynomialMaxOrder) {
    throw BudgetExceeded("minimal-polynomial degree is limited to order " +
                         std::to_string(kMinimalPolynomialMaxOrder) + ", got " + std::to_string(n));
  }
  std::vector<EchelonRow> basis;
  IntMatrix power = IntMatrix::Identity(n, n);
  for (std::size_t degree = 0; degree <= n; ++degree) {
    if (degree > 0) power = (power * m.matrix()).eval();
    DenseVector<BigInt> v = flatten_upper(power);
    divide_by_content(v);
    if (reduce(v, basis)) return degree;
    Eigen::Index pivot = 0;
    while (v(pivot) == 0) ++pivot;
    basis.push_back({std::move(v), pivot});
  }
  // Cayley-Hamilton bounds the degree by n.
  throw std::logic_error("minimal polynomial degree exceeded the matrix order");
}

QuotientMatrix quotient_matrix(const IntSymMatrix& m, const Partition& p) {
  if (p.universe() != m.size()) {
    throw InvalidArgument("partition covers " + std::to_string(p.universe()) +
                          " indices but the matrix has order " + std::to_string(m.size()));
  }
  const std::size_t cells = p.cell_count();
  QuotientMatrix out;
  out.matrix = RationalMatrix::Zero(cells, cells);
  out.equitable = true;
  for (std::size_t bi = 0; bi < cells; ++bi) {
    for (std::size_t bj = 0; bj < cells; ++bj) {
      BigInt total = 0;
      BigInt first_row = 0;
      bool first = true;
      for (std::size_t r : p.cell(bi)) {
        BigInt row_sum = 0;
        for (std::size_t c : p.cell(bj)) row_sum += m(r, c);
        if (first) {
          first_row = row_sum;
          first = false;
        } else if (row_sum != first_row) {
          out.equitable = false;
        }
        total += row_sum;
      }
      out.matrix(bi, bj) = BigRational(total, BigInt(p.cell(bi).size()));
    }
  }
  return out;
}

}  // namespace distspec
