#pragma once

// Scalar and dense-matrix vocabulary shared by every module.
//
// Exact work happens over GMP-backed Boost.Multiprecision numbers with
// expression templates disabled, so `auto` and Eigen's generic kernels see
// plain value types.

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace distspec {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<BigInt>;
using RationalMatrix = DenseMatrix<BigRational>;

inline BigRational make_rational(const BigInt& num, const BigInt& den = 1) {
  return BigRational(num, den);
}

inline BigInt numerator_of(const BigRational& q) {
  return boost::multiprecision::numerator(q);
}
inline BigInt denominator_of(const BigRational& q) {
  return boost::multiprecision::denominator(q);
}

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const BigRational& x) { return x.sign(); }

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const BigRational& x) { return x.str(); }

// Throws std::overflow_error when x does not fit.
std::int64_t to_int64(const BigInt& x);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt pow_int(std::int64_t base, std::int64_t exponent);

}  // namespace distspec
