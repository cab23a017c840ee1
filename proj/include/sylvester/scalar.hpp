#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace sylvester {

using Integer = mpz_class;

/// Arbitrary-precision rational, always kept canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: integers convert implicitly
  Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q);

  Integer numerator() const { return Integer(q_.get_num()); }
  Integer denominator() const { return Integer(q_.get_den()); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  /// Canonical text: "p/q" with the sign on p, plain "p" when q = 1.
  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

/// rational_part + surd_part * sqrt(radicand), over a fixed radicand that is
/// a nonzero integer and not a perfect square (negative radicands give the
/// imaginary quadratic fields).
class QuadRational {
 public:
  QuadRational(Rational rational_part, Rational surd_part, long long radicand);

  const Rational& rational_part() const { return x_; }
  const Rational& surd_part() const { return y_; }
  long long radicand() const { return d_; }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

  QuadRational conjugate() const { return QuadRational(x_, -y_, d_); }
  /// rational_part^2 - radicand * surd_part^2; nonzero whenever the value is.
  Rational norm() const;
  QuadRational inverse() const;  // throws on zero

  QuadRational operator-() const { return QuadRational(-x_, -y_, d_); }
  friend QuadRational operator+(const QuadRational& a, const QuadRational& b);
  friend QuadRational operator-(const QuadRational& a, const QuadRational& b);
  friend QuadRational operator*(const QuadRational& a, const QuadRational& b);
  friend QuadRational operator/(const QuadRational& a, const QuadRational& b);

  friend bool operator==(const QuadRational& a, const QuadRational& b);
  friend bool operator!=(const QuadRational& a, const QuadRational& b) { return !(a == b); }

 private:
  static void require_same_radicand(const QuadRational& a, const QuadRational& b);
  Rational x_, y_;
  long long d_;
};

/// Exact scalar: either a rational or an element of one quadratic extension.
/// Binary operations promote a rational operand into the other operand's
/// field; two extensions with different radicands do not mix. A quadratic
/// value whose surd part vanishes is normalized back to a plain rational, so
/// equality is plain field-wise comparison.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}  // NOLINT
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT
  Scalar(const QuadRational& q);  // NOLINT

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const QuadRational& quad() const { return std::get<QuadRational>(v_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  std::variant<Rational, QuadRational> v_;
};

/// Parses the scalar grammar: a sum of signed terms, each either a rational
/// "p" / "p/q" or a surd "[coef] [*] sqrt(d)". Whitespace-insensitive.
/// Throws std::invalid_argument on syntax errors, zero denominators, and
/// zero or perfect-square radicands.
Scalar parse_scalar(std::string_view text);

/// Canonical text form; parse_scalar(format_scalar(x)) == x.
/// Rationals print as "p" or "p/q"; quadratic values print both parts, e.g.
/// "3/2+1/4*sqrt(2)", "34250061-6965604*sqrt(2)", "0+1*sqrt(2)".
std::string format_scalar(const Scalar& s);

/// base^n by binary exponentiation; n may be negative for nonzero base.
Scalar pow(const Scalar& base, long long n);

/// Integer base to a (possibly negative) power, as an exact rational.
Rational rational_pow(const Integer& base, long long n);

/// Decimal approximation with `digits` fractional digits, rounded half away
/// from zero, computed exactly (integer square-root bounds, no floating
/// point). Negative radicands yield "re+imi" / "re-imi" complex form.
std::string decimal_approx(const Scalar& s, unsigned digits);

}  // namespace sylvester
