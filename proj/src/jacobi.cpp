#include "distspec/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace distspec {

double default_cluster_tolerance(const std::vector<double>& descending) {
  double radius = 0.0;
  for (double v : descending) radius = std::max(radius, std::abs(v));
  return 1e-6 * std::max(1.0, radius);
}

Spectrum numeric_spectrum(const IntSymMatrix& m, double tol, double cluster_tol) {
  if (m.size() > kNumericMaxOrder) {
    throw BudgetExceeded("numeric eigenvalues are limited to order " + std::to_string(kNumericMaxOrder));
  }
  const std::vector<double> values = sym_eigenvalues(m.to_double(), tol);
  return cluster_to_spectrum(values, cluster_tol > 0.0 ? cluster_tol : default_cluster_tolerance(values));
}

}  // namespace distspec
