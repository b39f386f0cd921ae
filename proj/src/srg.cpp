#include "distspec/srg.hpp"

#include "distspec/errors.hpp"

namespace distspec {

namespace {

SrgFeasibility infeasible(std::string reason) { return {SrgStatus::Infeasible, std::move(reason)}; }

void require_feasible(const SrgParams& p) {
  const SrgFeasibility f = check_feasibility(p);
  if (f.status == SrgStatus::Complete) {
    throw InvalidArgument("parameters " + p.to_string() + " describe a complete graph");
  }
  if (f.status == SrgStatus::Infeasible) {
    throw InvalidArgument("parameters " + p.to_string() + " are infeasible: " + f.reason);
  }
}

BigInt discriminant(const SrgParams& p) {
  const BigInt gap = p.lambda - p.mu;
  return gap * gap + 4 * BigInt(p.k - p.mu);
}

// 2k + (n-1)(lambda - mu); m_tau - m_theta equals this over sqrt(discriminant).
BigInt multiplicity_skew(const SrgParams& p) { return 2 * BigInt(p.k) + BigInt(p.n - 1) * (p.lambda - p.mu); }

}  // namespace

std::string SrgParams::to_string() const {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," + std::to_string(mu) +
         ")";
}

SrgFeasibility check_feasibility(const SrgParams& p) {
  if (p.n < 2 || p.k <= 0) return infeasible("need n >= 2 and k > 0");
  if (p.k >= p.n) return infeasible("need k < n");
  if (p.k == p.n - 1) {
    if (p.lambda != p.n - 2) return infeasible("a complete graph has lambda = n - 2");
    return {SrgStatus::Complete, {}};
  }
  if (p.mu <= 0) return infeasible("need mu > 0 (mu = 0 is a disjoint union of cliques)");
  if (p.mu > p.k) return infeasible("need mu <= k");
  if (p.lambda < 0 || p.lambda >= p.k) return infeasible("need 0 <= lambda < k");
  if (BigInt(p.k) * (p.k - p.lambda - 1) != BigInt(p.n - p.k - 1) * p.mu) {
    return infeasible("k(k - lambda - 1) != (n - k - 1) mu");
  }
  if (p.n - 2 - 2 * p.k + p.mu < 0 || p.n - 2 * p.k + p.lambda < 0) {
    return infeasible("complement would have a negative lambda or mu");
  }
  const BigInt skew = multiplicity_skew(p);
  BigInt root;
  if (is_perfect_square(discriminant(p), &root)) {
    if (skew % root != 0) return infeasible("eigenvalue multiplicities are not integers");
    const BigInt twice_m_theta = BigInt(p.n - 1) - skew / root;
    const BigInt twice_m_tau = BigInt(p.n - 1) + skew / root;
    if (twice_m_theta % 2 != 0) return infeasible("eigenvalue multiplicities are not integers");
    if (twice_m_theta < 0 || twice_m_tau < 0) return infeasible("negative eigenvalue multiplicity");
  } else if (skew != 0 || (p.n - 1) % 2 != 0) {
    return infeasible("irrational eigenvalues without conference parameters");
  }
  return {SrgStatus::Feasible, {}};
}

bool is_feasible(const SrgParams& p) { return check_feasibility(p).status == SrgStatus::Feasible; }

SrgEigenData srg_eigen_data(const SrgParams& p) {
  require_feasible(p);
  const BigInt delta = discriminant(p);
  const BigRational half_gap(BigInt(p.lambda - p.mu), 2);
  SrgEigenData out;
  out.theta = QuadraticNumber::make(half_gap, BigRational(1, 2), delta);
  out.tau = QuadraticNumber::make(half_gap, BigRational(-1, 2), delta);
  out.theta_d = -out.theta - QuadraticNumber(2);
  out.tau_d = -out.tau - QuadraticNumber(2);
  out.rho_d = 2 * (p.n - 1) - p.k;
  BigInt root;
  const BigInt skew_over_root = is_perfect_square(delta, &root) ? BigInt(multiplicity_skew(p) / root) : BigInt(0);
  out.m_theta = to_int64((BigInt(p.n - 1) - skew_over_root) / 2);
  out.m_tau = to_int64((BigInt(p.n - 1) + skew_over_root) / 2);
  return out;
}

Spectrum srg_distance_spectrum(const SrgParams& p) {
  const SrgEigenData e = srg_eigen_data(p);
  return Spectrum::from_multiset({SpectrumEntry::of(e.rho_d, 1), SpectrumEntry::of(e.theta_d, e.m_theta),
                                  SpectrumEntry::of(e.tau_d, e.m_tau)});
}

bool is_optimistic(const SrgParams& p) {
  require_feasible(p);
  const BigRational lambda(p.lambda);
  const bool below = lambda < BigRational(p.mu + p.k - 4, 2);
  const bool above = lambda >= BigRational(p.mu) - BigRational(2 * p.k, p.n - 1);
  return below && above;
}

bool is_conference(const SrgParams& p) {
  require_feasible(p);
  return multiplicity_skew(p) == 0;
}

SrgParams complement_params(const SrgParams& p) {
  return {p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
}

SrgParams symplectic_params(int m, int q) {
  if (m < 2 || q < 2) throw InvalidArgument("symplectic_params(m, q) needs m >= 2, q >= 2");
  const BigInt top = pow_int(q, 2 * m - 2);
  const BigInt n = (pow_int(q, 2 * m) - 1) / (q - 1);
  const BigInt shared = top * (q - 1);
  return {to_int64(n), to_int64(top * q), to_int64(shared), to_int64(shared)};
}

SrgParams o2m1_params(int m, int e) {
  if (m < 2 || (e != 1 && e != -1)) throw InvalidArgument("o2m1_params(m, e) needs m >= 2 and e = +1 or -1");
  const BigInt p = pow_int(3, m);
  const BigInt p1 = pow_int(3, m - 1);
  const std::int64_t shared = to_int64(p1 * (p1 - e) / 2);
  return {to_int64(p * (e + p) / 2), to_int64(p1 * (p - e) / 2), shared, shared};
}

bool classify_one_positive(const SrgParams& p) {
  const SrgFeasibility f = check_feasibility(p);
  if (f.status == SrgStatus::Complete) return true;
  if (f.status == SrgStatus::Infeasible) {
    throw InvalidArgument("parameters " + p.to_string() + " are infeasible: " + f.reason);
  }
  if (p == SrgParams{5, 2, 0, 1}) return true;
  return srg_eigen_data(p).tau == QuadraticNumber(-2);
}

std::vector<SrgParams> feasible_parameters(std::int64_t max_n) {
  std::vector<SrgParams> out;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (std::int64_t k = 1; k < n - 1; ++k) {
      for (std::int64_t mu = 1; mu <= k; ++mu) {
        // The counting identity fixes lambda.
        const std::int64_t rhs = (n - k - 1) * mu;
        if (rhs % k != 0) continue;
        const SrgParams p{n, k, k - 1 - rhs / k, mu};
        if (p.lambda >= 0 && is_feasible(p)) out.push_back(p);
      }
    }
  }
  return out;
}

}  // namespace distspec
