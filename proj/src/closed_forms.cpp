#include "distspec/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "distspec/errors.hpp"

namespace distspec {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

SpectrumEntry exact(const QuadraticNumber& value, const BigInt& multiplicity) {
  require(multiplicity >= 0, "negative multiplicity " + multiplicity.str());
  return SpectrumEntry::of(value, to_int64(multiplicity));
}

SpectrumEntry integer(const BigInt& value, const BigInt& multiplicity) {
  return exact(QuadraticNumber(BigRational(value)), multiplicity);
}

// Exact when the arithmetic stays within one radicand, float otherwise.
SpectrumEntry affine(const SpectrumEntry& e, const BigRational& scale, const QuadraticNumber& shift,
                     std::int64_t multiplicity) {
  SpectrumEntry out;
  out.multiplicity = multiplicity;
  out.value = e.value * scale.convert_to<double>() + shift.to_double();
  if (e.exact) {
    try {
      out.exact = *e.exact * QuadraticNumber(scale) + shift;
      out.value = out.exact->to_double();
    } catch (const InvalidArgument&) {
      out.exact.reset();
    }
  }
  return out;
}

// Perron value first, then the remaining eigenvalues with multiplicity.
std::pair<SpectrumEntry, std::vector<SpectrumEntry>> split_perron(const Spectrum& s, std::int64_t n,
                                                                  const char* what) {
  if (s.dimension() != n) {
    throw InvalidArgument(std::string(what) + ": spectrum has dimension " + std::to_string(s.dimension()) +
                          ", expected " + std::to_string(n));
  }
  require(n >= 1, std::string(what) + ": empty spectrum");
  std::vector<SpectrumEntry> rest = s.entries();
  SpectrumEntry perron = rest.front();
  perron.multiplicity = 1;
  if (--rest.front().multiplicity == 0) rest.erase(rest.begin());
  return {perron, rest};
}

ClosedFormSpectrum build(std::vector<SpectrumEntry> entries, std::string provenance) {
  return {Spectrum::from_multiset(std::move(entries)), std::move(provenance)};
}

BigRational power_of_two(std::int64_t exponent) {
  BigRational out = 1;
  const BigRational factor = exponent >= 0 ? BigRational(2) : BigRational(1, 2);
  for (std::int64_t i = 0; i < std::abs(exponent); ++i) out *= factor;
  return out;
}

}  // namespace

ClosedFormSpectrum cycle_spectrum(int n) {
  require(n >= 3, "cycle_spectrum(n) needs n >= 3");
  const double pi = std::numbers::pi;
  std::vector<SpectrumEntry> entries;
  const int p = n / 2;
  if (n % 2 == 1) {
    entries.push_back(exact(QuadraticNumber(BigRational(n * n - 1, 4)), 1));
    for (int j = 1; j <= p; ++j) {
      const double c = std::cos(pi * j / n);
      entries.push_back({-0.25 / (c * c), std::nullopt, 2});
    }
  } else {
    entries.push_back(integer(BigInt(p) * p, 1));
    entries.push_back(integer(0, p - 1));
    for (int j = 1; j <= p / 2; ++j) {
      const double s = std::sin(pi * (2 * j - 1) / n);
      entries.push_back({-1.0 / (s * s), std::nullopt, 2});
    }
    if (p % 2 == 1) entries.push_back(integer(-1, 1));
  }
  return build(std::move(entries), "cycle distance spectrum (secant/cosecant form)");
}

ClosedFormSpectrum hamming_spectrum(int d, int n) {
  require(d >= 1 && n >= 2, "hamming_spectrum(d, n) needs d >= 1, n >= 2");
  const BigInt top = pow_int(n, d - 1);
  const BigInt order = pow_int(n, d);
  const BigInt spread = BigInt(d) * (n - 1);
  return build({integer(top * spread, 1), integer(0, order - spread - 1), integer(-top, spread)},
               "Hamming graph distance spectrum");
}

ClosedFormSpectrum shrikhande_power_spectrum(int m) {
  require(m >= 1, "shrikhande_power_spectrum(m) needs m >= 1");
  ClosedFormSpectrum out = doob_spectrum(m, 0);
  out.provenance = "cartesian power of the Shrikhande graph";
  return out;
}

ClosedFormSpectrum doob_spectrum(int m, int d) {
  require(m >= 1 && d >= 0, "doob_spectrum(m, d) needs m >= 1, d >= 0");
  const int e = 2 * m + d;
  const BigInt top = pow_int(4, e - 1);
  const BigInt spread = BigInt(6) * m + BigInt(3) * d;
  return build({integer(BigInt(3) * e * top, 1), integer(0, pow_int(4, e) - spread - 1), integer(-top, spread)},
               "Doob graph distance spectrum");
}

BigInt s_value(int n, int r) {
  require(r >= 0 && r <= n, "s_value(n, r) needs 0 <= r <= n");
  BigInt sum = 0;
  for (int j = 0; j <= r; ++j) sum += BigInt(j) * binomial(r, j) * binomial(n - r, j);
  return sum;
}

ClosedFormSpectrum johnson_spectrum(int n, int r) {
  require(r >= 1 && r <= n - 1, "johnson_spectrum(n, r) needs 1 <= r <= n-1");
  const BigInt s = s_value(n, r);
  return build({integer(s, 1), integer(0, binomial(n, r) - n), exact(QuadraticNumber(BigRational(-s, n - 1)), n - 1)},
               "Johnson graph distance spectrum");
}

BigInt eberlein(int i, int j, int n, int r) {
  require(r >= 0 && r <= n && i >= 0 && i <= r && j >= 0 && j <= r, "eberlein(i, j, n, r) needs 0 <= i, j <= r <= n");
  BigInt sum = 0;
  for (int t = 0; t <= j; ++t) {
    const BigInt term = binomial(j, t) * binomial(r - j, i - t) * binomial(n - r - j, i - t);
    if (t % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::int64_t kneser_f(int i, int n, int r) {
  require(n > 2 * r && r >= 1, "kneser_f needs n > 2r >= 2");
  require(i >= 0 && i <= r, "kneser_f(i, n, r) needs 0 <= i <= r");
  const std::int64_t g = n - 2 * r;
  auto ceil_div = [g](std::int64_t x) { return (x + g - 1) / g; };
  return std::min(2 * ceil_div(i), 2 * ceil_div(r - i) + 1);
}

BigInt kneser_multiplicity(int j, int n, int r) {
  require(j >= 0 && j <= r && r <= n, "kneser_multiplicity(j, n, r) needs 0 <= j <= r <= n");
  const BigInt numerator = BigInt(n - 2 * j + 1) * binomial(n, j);
  const BigInt denominator = n - j + 1;
  require(numerator % denominator == 0, "eigenspace dimension is not an integer");
  return numerator / denominator;
}

ClosedFormSpectrum kneser_spectrum(int n, int r) {
  require(r >= 1 && n > 2 * r, "kneser_spectrum(n, r) needs n > 2r >= 2");
  std::vector<SpectrumEntry> entries;
  for (int j = 0; j <= r; ++j) {
    BigInt theta = 0;
    for (int i = 0; i <= r; ++i) theta += BigInt(kneser_f(i, n, r)) * eberlein(i, j, n, r);
    entries.push_back(integer(theta, kneser_multiplicity(j, n, r)));
  }
  return build(std::move(entries), "Kneser graph distance spectrum via Johnson-scheme eigenvalues");
}

ClosedFormSpectrum double_odd_spectrum(int r) {
  require(r >= 2, "double_odd_spectrum(r) needs r >= 2");
  const BigInt c = binomial(2 * r + 1, r);
  const BigInt s = s_value(2 * r + 1, r);
  require(2 * s % r == 0, "double odd eigenvalue is not an integer");
  return build({integer(BigInt(2 * r + 1) * c, 1), integer(0, 2 * c - 2 * r - 2), integer(-2 * s / r, 2 * r),
                integer(-BigInt(2 * r + 1) * c + 4 * s, 1)},
               "double odd graph distance spectrum");
}

ClosedFormSpectrum halved_cube_spectrum(int d) {
  if (d < 4) {
    throw InvalidArgument("halved_cube_spectrum(d) is stated for d >= 4; use the numeric spectrum for d = " +
                          std::to_string(d));
  }
  const BigInt top = pow_int(2, d - 3);
  return build({integer(BigInt(d) * top, 1), integer(0, pow_int(2, d - 1) - (d + 1)), integer(-top, d)},
               "halved cube distance spectrum");
}

ClosedFormSpectrum cocktail_party_spectrum(int m) {
  require(m >= 2, "cocktail_party_spectrum(m) needs m >= 2");
  return build({integer(2 * m, 1), integer(0, m - 1), integer(-2, m)}, "cocktail party graph distance spectrum");
}

ClosedFormSpectrum icosahedron_spectrum() {
  return build({integer(18, 1), integer(0, 5), exact(QuadraticNumber::make(-3, 1, 5), 3),
                exact(QuadraticNumber::make(-3, -1, 5), 3)},
               "icosahedron distance spectrum");
}

ClosedFormSpectrum dodecahedron_spectrum() {
  return build({integer(50, 1), integer(0, 9), exact(QuadraticNumber::make(-7, 3, 5), 3),
                exact(QuadraticNumber::make(-7, -3, 5), 3), integer(-2, 4)},
               "dodecahedron distance spectrum");
}

std::pair<BigInt, BigInt> lemma_identities(int selector, std::int64_t p, std::int64_t q) {
  BigInt lhs = 0;
  BigRational rhs = 0;
  switch (selector) {
    case 1:
      require(p >= 1, "identity 1 needs s >= 1");
      for (std::int64_t k = 0; k <= p; ++k) lhs += (k % 2 == 0 ? 1 : -1) * binomial(p, k);
      break;
    case 2:
      require(p >= 2, "identity 2 needs s >= 2");
      for (std::int64_t k = 0; k <= p; ++k) lhs += (k % 2 == 0 ? 1 : -1) * k * binomial(p, k);
      break;
    case 3:
      require(p >= 2, "identity 3 needs d >= 2");
      for (std::int64_t i = 0; i <= p / 2; ++i) lhs += 2 * i * binomial(p, 2 * i);
      rhs = BigRational(p) * power_of_two(p - 2);
      break;
    case 4:
      require(p >= 2, "identity 4 needs d >= 2");
      for (std::int64_t i = 0; i <= (p - 1) / 2; ++i) lhs += (2 * i + 1) * binomial(p, 2 * i + 1);
      rhs = BigRational(p) * power_of_two(p - 2);
      break;
    case 5:
      require(p >= 2, "identity 5 needs d >= 2");
      for (std::int64_t i = 0; i <= p / 2; ++i) lhs += 4 * i * i * binomial(p, 2 * i);
      rhs = BigRational(p * (p + 1)) * power_of_two(p - 3);
      break;
    case 6:
      require(p >= 2 && q >= 0, "identity 6 needs a >= 2, b >= 0");
      for (std::int64_t i = (q + 1) / 2; i <= (p + q) / 2; ++i) lhs += i * binomial(p, 2 * i - q);
      rhs = BigRational(p + 2 * q) * power_of_two(p - 3);
      break;
    default:
      throw InvalidArgument("identity selector must be in 1..6, got " + std::to_string(selector));
  }
  require(denominator_of(rhs) == 1, "right-hand side " + rhs.str() + " is not an integer");
  return {lhs, numerator_of(rhs)};
}

Spectrum product_spectrum(const Spectrum& spec_g, std::int64_t n_g, const Spectrum& spec_h, std::int64_t n_h) {
  const auto [rho_g, rest_g] = split_perron(spec_g, n_g, "product_spectrum (first factor)");
  const auto [rho_h, rest_h] = split_perron(spec_h, n_h, "product_spectrum (second factor)");
  std::vector<SpectrumEntry> entries;
  const SpectrumEntry scaled_h = affine(rho_h, BigRational(n_g), 0, 1);
  entries.push_back(scaled_h.exact ? affine(rho_g, BigRational(n_h), *scaled_h.exact, 1)
                                   : SpectrumEntry{n_h * rho_g.value + n_g * rho_h.value, std::nullopt, 1});
  for (const auto& e : rest_g) entries.push_back(affine(e, BigRational(n_h), 0, e.multiplicity));
  for (const auto& e : rest_h) entries.push_back(affine(e, BigRational(n_g), 0, e.multiplicity));
  entries.push_back(SpectrumEntry::of(0, (n_g - 1) * (n_h - 1)));
  return Spectrum::from_multiset(std::move(entries));
}

Spectrum block_lemma_spectrum(const Spectrum& spec_d, std::int64_t n, const BigRational& a_e, const BigRational& b_e,
                              const BigRational& c_e, const BigRational& a_o, const BigRational& b_o,
                              const BigRational& c_o) {
  const auto [rho, rest] = split_perron(spec_d, n, "block_lemma_spectrum");
  std::vector<SpectrumEntry> entries;
  for (const int sign : {1, -1}) {
    const BigRational a = a_e + sign * a_o;
    const BigRational b = b_e + sign * b_o;
    const BigRational c = c_e + sign * c_o;
    entries.push_back(affine(rho, a, QuadraticNumber(b * n + c), 1));
    for (const auto& e : rest) entries.push_back(affine(e, a, QuadraticNumber(c), e.multiplicity));
  }
  return Spectrum::from_multiset(std::move(entries));
}

BigInt barbell_determinant(int k, int m, int l) {
  require(k >= 2 && m >= 2 && l >= 0, "barbell_determinant(k, m, l) needs k, m >= 2, l >= 0");
  const BigInt magnitude = pow_int(2, l) * (BigInt(k) * m * (l + 5) - 2 * (k + m));
  return (k + m + l - 1) % 2 == 0 ? magnitude : BigInt(-magnitude);
}

BigInt lollipop_determinant(int k, int l) {
  require(k >= 2 && l >= 0, "lollipop_determinant(k, l) needs k >= 2, l >= 0");
  if (l == 0) return (k - 1) % 2 == 0 ? BigInt(k - 1) : BigInt(-(k - 1));
  const BigInt magnitude = pow_int(2, l - 1) * (BigInt(k) * (l + 2) - 2);
  return (k + l - 1) % 2 == 0 ? magnitude : BigInt(-magnitude);
}

Inertia barbell_inertia(int k, int m, int l) {
  require(k >= 2 && m >= 2 && l >= 0, "barbell_inertia(k, m, l) needs k, m >= 2, l >= 0");
  return {1, 0, static_cast<std::size_t>(k + m + l - 1)};
}

}  // namespace distspec
