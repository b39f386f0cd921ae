#include "distspec/quadratic.hpp"

#include <cmath>

#include "distspec/errors.hpp"

namespace distspec {

namespace {

// sign(x + y*sqrt(d)) for d >= 2 square-free (or any d when y == 0).
int sign_of_surd(const BigRational& x, const BigRational& y, const BigInt& d) {
  const int sx = x.sign();
  const int sy = y.sign();
  if (sy == 0 || d == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Opposite signs: compare x^2 with y^2 d.
  const int cmp = (x * x).compare(y * y * BigRational(d));
  return cmp == 0 ? 0 : (cmp > 0 ? sx : sy);
}

int sign_of_difference(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    return (x - y).sign();
  }
  // u - C*sqrt(q) where u = A + B*sqrt(p).
  const BigRational a = x.rational_part() - y.rational_part();
  const BigRational& b = x.surd_coefficient();
  const BigInt& p = x.radicand();
  const BigRational& c = y.surd_coefficient();
  const BigInt& q = y.radicand();
  const int su = sign_of_surd(a, b, p);
  const int sv = c.sign();
  if (su >= 0 && sv <= 0) return (su == 0 && sv == 0) ? 0 : 1;
  if (su <= 0 && sv >= 0) return -1;
  // Same signs: compare u^2 = A^2 + B^2 p + 2AB sqrt(p) with C^2 q.
  const BigRational rational = a * a + b * b * BigRational(p) - c * c * BigRational(q);
  const int s = sign_of_surd(rational, 2 * a * b, p);
  return su > 0 ? s : -s;
}

}  // namespace

bool is_perfect_square(const BigInt& x, BigInt* root) {
  if (x < 0) return false;
  BigInt r = boost::multiprecision::sqrt(x);
  if (root) *root = r;
  return r * r == x;
}

QuadraticNumber QuadraticNumber::make(BigRational a, BigRational b, const BigInt& radicand) {
  if (radicand < 0) throw InvalidArgument("square root of negative radicand " + radicand.str());
  if (b == 0 || radicand == 0) return QuadraticNumber(std::move(a));
  BigInt rest = radicand;
  BigInt outside = 1;
  for (BigInt f = 2; f * f <= rest; ++f) {
    const BigInt square = f * f;
    while (rest % square == 0) {
      rest /= square;
      outside *= f;
    }
  }
  b *= BigRational(outside);
  if (rest == 1) return QuadraticNumber(a + b);
  return QuadraticNumber(std::move(a), std::move(b), std::move(rest));
}

int QuadraticNumber::sign() const { return sign_of_surd(a_, b_, d_); }

double QuadraticNumber::to_double() const {
  const double a = a_.convert_to<double>();
  if (is_rational()) return a;
  return a + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return a_.str();
  const BigRational magnitude = abs(b_);
  return a_.str() + (b_ < 0 ? "-" : "+") + magnitude.str() + "*sqrt(" + d_.str() + ")";
}

QuadraticNumber QuadraticNumber::operator-() const { return QuadraticNumber(-a_, -b_, d_); }

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& other) {
  if (other.is_rational()) {
    a_ += other.a_;
    return *this;
  }
  if (!is_rational() && d_ != other.d_) {
    throw InvalidArgument("cannot add sqrt(" + d_.str() + ") and sqrt(" + other.d_.str() + ") terms");
  }
  a_ += other.a_;
  b_ += other.b_;
  d_ = other.d_;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& other) { return *this += -other; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& other) {
  if (other.is_rational()) {
    a_ *= other.a_;
    b_ *= other.a_;
    if (b_ == 0) d_ = 0;
    return *this;
  }
  if (is_rational()) {
    const BigRational scale = a_;
    *this = other;
    a_ *= scale;
    b_ *= scale;
    if (b_ == 0) d_ = 0;
    return *this;
  }
  if (d_ != other.d_) {
    throw InvalidArgument("cannot multiply sqrt(" + d_.str() + ") and sqrt(" + other.d_.str() + ") terms");
  }
  const BigRational a = a_ * other.a_ + b_ * other.b_ * BigRational(d_);
  const BigRational b = a_ * other.b_ + b_ * other.a_;
  a_ = a;
  b_ = b;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const BigRational& divisor) {
  if (divisor == 0) throw InvalidArgument("division by zero");
  a_ /= divisor;
  b_ /= divisor;
  return *this;
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
  const int s = sign_of_difference(x, y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace distspec
