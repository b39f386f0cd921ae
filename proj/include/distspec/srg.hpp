#pragma once

// Parameter arithmetic for strongly regular graphs (n, k, lambda, mu).

#include <cstdint>
#include <string>
#include <vector>

#include "distspec/quadratic.hpp"
#include "distspec/spectrum.hpp"

namespace distspec {

struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
  std::string to_string() const;
};

enum class SrgStatus {
  Feasible,
  /// k = n - 1: the complete graph, where mu is undefined.
  Complete,
  Infeasible,
};

struct SrgFeasibility {
  SrgStatus status = SrgStatus::Infeasible;
  /// Names the failed condition when infeasible.
  std::string reason;
};

/// Requires 0 < k < n - 1, 0 < mu <= k, 0 <= lambda < k,
/// k(k - lambda - 1) = (n - k - 1) mu, complement parameters
/// n - 2 - 2k + mu >= 0 and n - 2k + lambda >= 0, and eigenvalue
/// multiplicities that are non-negative integers (conference parameters may
/// have irrational eigenvalues).
SrgFeasibility check_feasibility(const SrgParams& p);
bool is_feasible(const SrgParams& p);

struct SrgEigenData {
  QuadraticNumber theta;
  QuadraticNumber tau;
  QuadraticNumber theta_d;
  QuadraticNumber tau_d;
  std::int64_t rho_d = 0;
  std::int64_t m_theta = 0;
  std::int64_t m_tau = 0;
};

/// Adjacency eigenvalues theta > tau and the distance eigenvalues
/// rho_D = 2(n-1) - k, theta_D = -theta - 2, tau_D = -tau - 2.
/// Throws InvalidArgument for infeasible parameters.
SrgEigenData srg_eigen_data(const SrgParams& p);
Spectrum srg_distance_spectrum(const SrgParams& p);

/// lambda < (mu + k - 4)/2 and lambda >= mu - 2k/(n-1), compared exactly.
bool is_optimistic(const SrgParams& p);
/// 2k + (n-1)(lambda - mu) = 0, i.e. (n, (n-1)/2, (n-5)/4, (n-1)/4).
bool is_conference(const SrgParams& p);

/// (n, n-k-1, n-2-2k+mu, n-2k+lambda). The result has mu = 0 when the
/// complement is disconnected; it is returned unvalidated.
SrgParams complement_params(const SrgParams& p);
/// Symplectic graph Sp(2m, q): ((q^2m - 1)/(q - 1), q^(2m-1), q^(2m-2)(q-1), q^(2m-2)(q-1)).
SrgParams symplectic_params(int m, int q);
/// O_{2m+1}(3) on one class of nonisotropic points, e = +1 or -1.
SrgParams o2m1_params(int m, int e);

/// True when the graph has exactly one positive distance eigenvalue: tau = -2,
/// the pentagon (5, 2, 0, 1), or a complete graph (k = n - 1, any mu).
bool classify_one_positive(const SrgParams& p);

/// Every feasible tuple with n <= max_n, ordered by (n, k, mu).
std::vector<SrgParams> feasible_parameters(std::int64_t max_n);

}  // namespace distspec
