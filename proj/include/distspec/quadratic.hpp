#pragma once

#include <compare>
#include <string>

#include "distspec/scalar.hpp"

namespace distspec {

/// Exact real a + b*sqrt(d) with rational a, b and square-free d.
///
/// Canonical form: d is 0 exactly when b is 0, and otherwise d >= 2 is
/// square-free, so equal values have equal representations. Sums and
/// products of two irrational values need a common radicand; comparison is
/// exact for any pair.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(BigRational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long long a) : a_(a) {}               // NOLINT(google-explicit-constructor)

  /// a + b*sqrt(radicand); square factors of the radicand are pulled into b.
  static QuadraticNumber make(BigRational a, BigRational b, const BigInt& radicand);
  static QuadraticNumber sqrt(const BigInt& radicand) { return make(0, 1, radicand); }

  const BigRational& rational_part() const { return a_; }
  const BigRational& surd_coefficient() const { return b_; }
  const BigInt& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return is_rational() && denominator_of(a_) == 1; }
  int sign() const;
  double to_double() const;

  /// "a" for rationals, otherwise "a+b*sqrt(d)" (or "a-b*sqrt(d)").
  std::string to_string() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& other);
  QuadraticNumber& operator-=(const QuadraticNumber& other);
  QuadraticNumber& operator*=(const QuadraticNumber& other);
  /// Division by a nonzero rational.
  QuadraticNumber& operator/=(const BigRational& divisor);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const BigRational& y) { return x /= y; }

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);

 private:
  QuadraticNumber(BigRational a, BigRational b, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  BigRational a_ = 0;
  BigRational b_ = 0;
  BigInt d_ = 0;
};

/// True when x is a perfect square (x >= 0); root receives the square root.
bool is_perfect_square(const BigInt& x, BigInt* root = nullptr);

}  // namespace distspec
