#include <doctest.h>

#include <cmath>
#include <numbers>

#include "distspec/closed_forms.hpp"
#include "distspec/distance.hpp"
#include "distspec/errors.hpp"
#include "distspec/exact_linalg.hpp"
#include "distspec/families.hpp"
#include "distspec/jacobi.hpp"
#include "distspec/srg.hpp"

using namespace distspec;

namespace {

Spectrum integers(std::initializer_list<std::pair<long long, std::int64_t>> values) {
  std::vector<SpectrumEntry> entries;
  for (auto [v, m] : values) entries.push_back(SpectrumEntry::of(v, m));
  return Spectrum::from_multiset(entries);
}

bool exactly(const Spectrum& a, const Spectrum& b) {
  if (a.distinct_count() != b.distinct_count()) return false;
  for (std::size_t i = 0; i < a.distinct_count(); ++i) {
    const auto& x = a.entries()[i];
    const auto& y = b.entries()[i];
    if (!x.exact || !y.exact || *x.exact != *y.exact || x.multiplicity != y.multiplicity) return false;
  }
  return true;
}

bool matches_oracle(const ClosedFormSpectrum& closed, const Graph& g) {
  return spectra_match(closed.spectrum, numeric_spectrum(distance_matrix(g)), 1e-8);
}

void check_integral_trace_zero(const ClosedFormSpectrum& c, std::int64_t order) {
  CHECK(c.spectrum.dimension() == order);
  const auto trace = c.spectrum.exact_trace();
  REQUIRE(trace.has_value());
  CHECK(*trace == QuadraticNumber(0));
}

}  // namespace

TEST_CASE("cycle spectra") {
  const Spectrum c5 = cycle_spectrum(5).spectrum;
  const double pi = std::numbers::pi;
  CHECK(c5.largest().value == 6.0);
  CHECK(c5.entries()[1].value == doctest::Approx(-0.25 / std::pow(std::cos(pi / 5), 2)));
  CHECK(c5.entries()[2].value == doctest::Approx(-0.25 / std::pow(std::cos(2 * pi / 5), 2)));
  CHECK(spectra_match(cycle_spectrum(4).spectrum, integers({{4, 1}, {0, 1}, {-2, 2}}), 1e-12));
  CHECK(spectra_match(cycle_spectrum(6).spectrum, integers({{9, 1}, {0, 2}, {-1, 1}, {-4, 2}}), 1e-12));
  for (int n = 3; n <= 16; ++n) {
    CHECK(cycle_spectrum(n).spectrum.dimension() == n);
    CHECK(std::abs(cycle_spectrum(n).spectrum.trace()) < 1e-9);
    CHECK(matches_oracle(cycle_spectrum(n), cycle(n)));
  }
  CHECK_THROWS_AS(cycle_spectrum(2), InvalidArgument);
}

TEST_CASE("Hamming and Shrikhande-power spectra") {
  CHECK(exactly(hamming_spectrum(1, 2).spectrum, integers({{1, 1}, {-1, 1}})));
  CHECK(exactly(hamming_spectrum(3, 2).spectrum, integers({{12, 1}, {0, 4}, {-4, 3}})));
  for (int n = 2; n <= 6; ++n)
    CHECK(exactly(hamming_spectrum(2, n).spectrum,
                  integers({{2 * n * (n - 1), 1}, {0, (n - 1) * (n - 1)}, {-n, 2 * (n - 1)}})));
  CHECK(exactly(shrikhande_power_spectrum(1).spectrum, integers({{24, 1}, {0, 9}, {-4, 6}})));
  CHECK(exactly(shrikhande_power_spectrum(2).spectrum, integers({{768, 1}, {0, 243}, {-64, 12}})));
  CHECK(exactly(doob_spectrum(1, 1).spectrum, integers({{144, 1}, {0, 54}, {-16, 9}})));
  CHECK(exactly(doob_spectrum(1, 0).spectrum, shrikhande_power_spectrum(1).spectrum));
  CHECK(matches_oracle(hamming_spectrum(3, 3), hamming(3, 3)));
  CHECK(matches_oracle(shrikhande_power_spectrum(1), shrikhande()));
  CHECK_THROWS_AS(hamming_spectrum(0, 3), InvalidArgument);
  CHECK_THROWS_AS(doob_spectrum(0, 1), InvalidArgument);
}

TEST_CASE("Johnson spectra") {
  CHECK(s_value(5, 2) == 12);
  CHECK(s_value(6, 3) == 30);
  CHECK(s_value(7, 3) == 60);
  CHECK(exactly(johnson_spectrum(5, 2).spectrum, integers({{12, 1}, {0, 5}, {-3, 4}})));
  for (int n = 3; n <= 8; ++n) CHECK(exactly(johnson_spectrum(n, 1).spectrum, integers({{n - 1, 1}, {-1, n - 1}})));
  // L(K_m) = J(m, 2): {(m-1)(m-2), 0^(m(m-3)/2), (2-m)^(m-1)}.
  for (int m = 4; m <= 9; ++m)
    CHECK(exactly(johnson_spectrum(m, 2).spectrum,
                  integers({{(m - 1) * (m - 2), 1}, {0, m * (m - 3) / 2}, {2 - m, m - 1}})));
  CHECK(matches_oracle(johnson_spectrum(6, 3), johnson(6, 3)));
  CHECK_THROWS_AS(johnson_spectrum(5, 5), InvalidArgument);
}

TEST_CASE("Eberlein polynomials and Kneser spectra") {
  for (int j = 0; j <= 3; ++j) CHECK(eberlein(0, j, 8, 3) == 1);
  for (int i = 0; i <= 3; ++i) CHECK(eberlein(i, 0, 8, 3) == binomial(3, i) * binomial(5, i));
  CHECK(kneser_f(0, 5, 2) == 0);
  CHECK(kneser_f(1, 5, 2) == 2);
  CHECK(kneser_f(2, 5, 2) == 1);
  BigInt total = 0;
  for (int j = 0; j <= 3; ++j) total += kneser_multiplicity(j, 9, 3);
  CHECK(total == binomial(9, 3));
  CHECK(exactly(kneser_spectrum(5, 2).spectrum, integers({{15, 1}, {0, 4}, {-3, 5}})));
  CHECK(matches_oracle(kneser_spectrum(7, 3), odd_graph(3)));
  CHECK(matches_oracle(kneser_spectrum(8, 3), kneser(8, 3)));
  CHECK(kneser_spectrum(9, 2).spectrum.dimension() == 36);
  CHECK_THROWS_AS(kneser_spectrum(6, 3), InvalidArgument);
  CHECK_THROWS_AS(eberlein(4, 0, 8, 3), InvalidArgument);
}

TEST_CASE("Kneser spectra merge coinciding eigenvalues") {
  // K(n, 1) = K_n: the j = 1 eigenvalue is -1, no duplicates; K(9, 4) has
  // several eigenspaces, all multiplicities must still sum to C(9, 4).
  for (int n = 3; n <= 12; ++n)
    for (int r = 1; 2 * r < n; ++r) {
      const Spectrum s = kneser_spectrum(n, r).spectrum;
      CHECK(s.dimension() == binomial(n, r));
      CHECK(s.exact_trace() == QuadraticNumber(0));
    }
}

TEST_CASE("double odd spectra") {
  CHECK(exactly(double_odd_spectrum(2).spectrum, integers({{50, 1}, {0, 14}, {-2, 1}, {-12, 4}})));
  CHECK(matches_oracle(double_odd_spectrum(2), double_odd(2)));
  CHECK(matches_oracle(double_odd_spectrum(3), double_odd(3)));
  CHECK_THROWS_AS(double_odd_spectrum(1), InvalidArgument);
}

TEST_CASE("double odd block identity") {
  for (int r = 2; r <= 3; ++r) {
    const IntSymMatrix d = distance_matrix(johnson(2 * r + 1, r));
    const IntSymMatrix dd = distance_matrix(double_odd(r));
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(dd(i, j) == 2 * d(i, j));
        CHECK(dd(n + i, n + j) == 2 * d(i, j));
        CHECK(dd(i, n + j) == (2 * r + 1) - 2 * d(i, j));
      }
  }
}

TEST_CASE("halved cube spectra") {
  CHECK(exactly(halved_cube_spectrum(4).spectrum, integers({{8, 1}, {0, 3}, {-2, 4}})));
  CHECK(exactly(halved_cube_spectrum(4).spectrum, cocktail_party_spectrum(4).spectrum));
  CHECK(exactly(halved_cube_spectrum(5).spectrum, integers({{20, 1}, {0, 10}, {-4, 5}})));
  CHECK(matches_oracle(halved_cube_spectrum(5), halved_cube(5)));
  CHECK(matches_oracle(halved_cube_spectrum(6), halved_cube(6)));
  CHECK_THROWS_AS(halved_cube_spectrum(3), InvalidArgument);
}

TEST_CASE("golden spectra with irrational values") {
  CHECK(matches_oracle(icosahedron_spectrum(), icosahedron()));
  CHECK(matches_oracle(dodecahedron_spectrum(), dodecahedron()));
  check_integral_trace_zero(icosahedron_spectrum(), 12);
  check_integral_trace_zero(dodecahedron_spectrum(), 20);
  for (int m = 2; m <= 8; ++m) CHECK(matches_oracle(cocktail_party_spectrum(m), cocktail_party(m)));
}

TEST_CASE("integral closed forms have zero trace") {
  check_integral_trace_zero(hamming_spectrum(4, 3), 81);
  check_integral_trace_zero(doob_spectrum(2, 1), 1024);
  check_integral_trace_zero(johnson_spectrum(9, 4), 126);
  check_integral_trace_zero(kneser_spectrum(11, 4), 330);
  check_integral_trace_zero(double_odd_spectrum(5), 924);
  check_integral_trace_zero(halved_cube_spectrum(10), 512);
}

TEST_CASE("lemma identities: spec examples") {
  CHECK(lemma_identities(3, 4) == std::pair<BigInt, BigInt>{16, 16});
  CHECK(lemma_identities(1, 3) == std::pair<BigInt, BigInt>{0, 0});
  CHECK(lemma_identities(6, 4, 0) == std::pair<BigInt, BigInt>{8, 8});
  CHECK_THROWS_AS(lemma_identities(7, 3), InvalidArgument);
  CHECK_THROWS_AS(lemma_identities(2, 1), InvalidArgument);
  CHECK_THROWS_AS(lemma_identities(6, 1, 0), InvalidArgument);
}

TEST_CASE("lemma identities: independent evaluation") {
  // Closed forms computed from (1+x)^d expansions rather than the stated rhs.
  for (int d = 2; d <= 20; ++d) {
    BigInt even_k = 0;
    BigInt even_k2 = 0;
    for (int k = 0; k <= d; k += 2) {
      even_k += BigInt(k) * binomial(d, k);
      even_k2 += BigInt(k) * k * binomial(d, k);
    }
    CHECK(lemma_identities(3, d).first == even_k);
    CHECK(lemma_identities(5, d).first == even_k2);
  }
  // Identity 5 fails at d = 2 (4 vs 3) and holds from d = 3 on.
  CHECK(lemma_identities(5, 2) == std::pair<BigInt, BigInt>{4, 3});
  for (int d = 3; d <= 20; ++d) {
    const auto [lhs, rhs] = lemma_identities(5, d);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("product spectra") {
  const Spectrum s = shrikhande_power_spectrum(1).spectrum;
  CHECK(exactly(product_spectrum(s, 16, s, 16), shrikhande_power_spectrum(2).spectrum));
  CHECK(exactly(product_spectrum(s, 16, hamming_spectrum(1, 4).spectrum, 4), doob_spectrum(1, 1).spectrum));
  // Self-product doubles the non-Perron multiplicities.
  const Spectrum pet = kneser_spectrum(5, 2).spectrum;
  const Spectrum square = product_spectrum(pet, 10, pet, 10);
  CHECK(exactly(square, integers({{300, 1}, {0, 81 + 8}, {-30, 10}})));
  CHECK(spectra_match(square, numeric_spectrum(distance_matrix(cartesian_product(petersen(), petersen()))), 1e-8));
  const Spectrum mixed = product_spectrum(cycle_spectrum(5).spectrum, 5, johnson_spectrum(5, 2).spectrum, 10);
  CHECK(spectra_match(mixed, numeric_spectrum(distance_matrix(cartesian_product(cycle(5), johnson(5, 2)))), 1e-8));
  CHECK_THROWS_AS(product_spectrum(pet, 9, pet, 10), InvalidArgument);
}

TEST_CASE("block lemma spectra") {
  for (int r = 2; r <= 3; ++r) {
    const Spectrum j = johnson_spectrum(2 * r + 1, r).spectrum;
    const Spectrum block = block_lemma_spectrum(j, j.dimension(), 2, 0, 0, -2, 2 * r + 1, 0);
    CHECK(exactly(block, double_odd_spectrum(r).spectrum));
  }
  // No off-diagonal block: two copies of the affine image.
  const Spectrum pet = kneser_spectrum(5, 2).spectrum;
  const Spectrum twice = block_lemma_spectrum(pet, 10, 3, 1, -2, 0, 0, 0);
  CHECK(exactly(twice, integers({{3 * 15 + 10 - 2, 2}, {-2, 8}, {-11, 10}})));
  CHECK_THROWS_AS(block_lemma_spectrum(pet, 11, 1, 0, 0, 0, 0, 0), InvalidArgument);
}

TEST_CASE("block lemma against an assembled matrix") {
  const IntSymMatrix d = distance_matrix(johnson(5, 2));
  const std::size_t n = d.size();
  IntSymMatrix m = IntSymMatrix::zero(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m.set(i, j, 2 * d(i, j));
      m.set(n + i, n + j, 2 * d(i, j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, n + j, 5 - 2 * d(i, j));
  const Spectrum predicted = block_lemma_spectrum(johnson_spectrum(5, 2).spectrum, 10, 2, 0, 0, -2, 5, 0);
  CHECK(spectra_match(predicted, numeric_spectrum(m), 1e-8));
  CHECK(m == distance_matrix(double_odd(2)));
}

TEST_CASE("barbell and lollipop determinants") {
  CHECK(barbell_determinant(2, 2, 0) == -12);
  CHECK(det_exact(distance_matrix(generalized_barbell(2, 2, 0))) == -12);
  for (int k = 2; k <= 8; ++k) {
    CHECK(lollipop_determinant(k, 0) == (k % 2 == 1 ? k - 1 : -(k - 1)));
    CHECK(lollipop_determinant(k, 0) == det_exact(distance_matrix(complete(k))));
    CHECK(lollipop_determinant(k, 1) == det_exact(distance_matrix(lollipop(k, 1))));
    for (int l = 2; l <= 8; ++l) {
      CHECK(lollipop_determinant(k, l) == barbell_determinant(k, 2, l - 2));
      CHECK(lollipop_determinant(k, l) == det_exact(distance_matrix(lollipop(k, l))));
    }
  }
  CHECK_THROWS_AS(barbell_determinant(1, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(lollipop_determinant(2, -1), InvalidArgument);
}

TEST_CASE("barbell determinants and inertia on a grid") {
  for (int k = 2; k <= 5; ++k)
    for (int m = 2; m <= 5; ++m)
      for (int l = 0; l <= 5; ++l) {
        const IntSymMatrix d = distance_matrix(generalized_barbell(k, m, l));
        CHECK(barbell_determinant(k, m, l) == det_exact(d));
        CHECK(barbell_inertia(k, m, l) == inertia_exact(d));
      }
}

TEST_CASE("cocktail party inertia follows from its spectrum") {
  for (int m = 2; m <= 8; ++m) {
    const Inertia expected{1, static_cast<std::size_t>(m - 1), static_cast<std::size_t>(m)};
    CHECK(inertia_exact(distance_matrix(cocktail_party(m))) == expected);
  }
}
