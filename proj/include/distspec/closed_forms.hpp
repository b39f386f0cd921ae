#pragma once

// Closed-form distance spectra of graph families, and determinant/inertia
// formulas for generalized barbells and lollipops.
//
// Integer and quadratic-irrational eigenvalues are carried exactly; only
// the cycle family has trigonometric (float) values.

#include <cstdint>
#include <string>
#include <utility>

#include "distspec/exact_linalg.hpp"
#include "distspec/spectrum.hpp"

namespace distspec {

struct ClosedFormSpectrum {
  Spectrum spectrum;
  std::string provenance;
};

ClosedFormSpectrum cycle_spectrum(int n);
ClosedFormSpectrum hamming_spectrum(int d, int n);
ClosedFormSpectrum shrikhande_power_spectrum(int m);
/// Product of m Shrikhande graphs with H(d,4); m >= 1, d >= 0.
ClosedFormSpectrum doob_spectrum(int m, int d);

/// s(n,r) = sum_j j C(r,j) C(n-r,j), the transmission of J(n,r).
BigInt s_value(int n, int r);
ClosedFormSpectrum johnson_spectrum(int n, int r);

/// Eberlein polynomial p_i(j) of the Johnson scheme J(n,r).
BigInt eberlein(int i, int j, int n, int r);
/// Distance in K(n,r) between two r-sets meeting in r - i elements.
std::int64_t kneser_f(int i, int n, int r);
/// Dimension of the j-th common eigenspace of the Johnson scheme.
BigInt kneser_multiplicity(int j, int n, int r);
/// n > 2r >= 2. Coinciding eigenvalues are merged.
ClosedFormSpectrum kneser_spectrum(int n, int r);

ClosedFormSpectrum double_odd_spectrum(int r);
/// Defined for d >= 4 only; smaller d must go through the numeric route.
ClosedFormSpectrum halved_cube_spectrum(int d);

ClosedFormSpectrum cocktail_party_spectrum(int m);
ClosedFormSpectrum icosahedron_spectrum();
ClosedFormSpectrum dodecahedron_spectrum();

/// Evaluates both sides of one of six binomial-sum identities.
///   1: sum_k (-1)^k C(s,k)               = 0                 (p = s >= 1)
///   2: sum_k (-1)^k k C(s,k)             = 0                 (p = s >= 2)
///   3: sum_i 2i C(d,2i)                  = d 2^(d-2)         (p = d >= 2)
///   4: sum_i (2i+1) C(d,2i+1)            = d 2^(d-2)         (p = d >= 2)
///   5: sum_i (2i)^2 C(d,2i)              = d(d+1) 2^(d-3)    (p = d >= 2)
///   6: sum_i i C(a,2i-b)                 = 2^(a-3)(a+2b)     (p = a >= 2, q = b >= 0)
/// Right-hand sides that are not integers are reported via InvalidArgument.
std::pair<BigInt, BigInt> lemma_identities(int selector, std::int64_t p, std::int64_t q = 0);

/// Distance spectrum of the cartesian product of two transmission-regular
/// graphs of orders n_g and n_h. The Perron value is the largest entry.
Spectrum product_spectrum(const Spectrum& spec_g, std::int64_t n_g, const Spectrum& spec_h, std::int64_t n_h);

/// Spectrum of [[a_e D + b_e J + c_e I, a_o D + b_o J + c_o I], [same off/on]]
/// for an n x n matrix D with constant row sums, given spec(D).
Spectrum block_lemma_spectrum(const Spectrum& spec_d, std::int64_t n, const BigRational& a_e, const BigRational& b_e,
                              const BigRational& c_e, const BigRational& a_o, const BigRational& b_o,
                              const BigRational& c_o);

/// det D(B(k;m;l)), k, m >= 2, l >= 0.
BigInt barbell_determinant(int k, int m, int l);
/// det D(L(k,l)), k >= 2, l >= 0.
BigInt lollipop_determinant(int k, int l);
/// Inertia of D(B(k;m;l)): one positive eigenvalue, the rest negative.
Inertia barbell_inertia(int k, int m, int l);

}  // namespace distspec
