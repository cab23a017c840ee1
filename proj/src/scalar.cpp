#include "sylvester/scalar.hpp"

#include <cctype>
#include <utility>

namespace sylvester {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  r.q_ = a.q_ + b.q_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  r.q_ = a.q_ - b.q_;
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  r.q_ = a.q_ * b.q_;
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Rational r;
  r.q_ = a.q_ / b.q_;
  return r;
}

// ---------------------------------------------------------------------------
// QuadRational

namespace {

bool valid_radicand(long long d) {
  if (d == 0) return false;
  if (d < 0) return true;
  Integer z(static_cast<long>(d));
  return mpz_perfect_square_p(z.get_mpz_t()) == 0;
}

}  // namespace

QuadRational::QuadRational(Rational rational_part, Rational surd_part, long long radicand)
    : x_(std::move(rational_part)), y_(std::move(surd_part)), d_(radicand) {
  if (!valid_radicand(d_))
    throw std::invalid_argument("radicand must be a nonzero non-square integer");
}

void QuadRational::require_same_radicand(const QuadRational& a, const QuadRational& b) {
  if (a.d_ != b.d_) throw std::domain_error("incompatible radicands");
}

Rational QuadRational::norm() const {
  return x_ * x_ - Rational(Integer(static_cast<long>(d_))) * y_ * y_;
}

QuadRational QuadRational::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  return QuadRational(x_ / n, -y_ / n, d_);
}

QuadRational operator+(const QuadRational& a, const QuadRational& b) {
  QuadRational::require_same_radicand(a, b);
  return QuadRational(a.x_ + b.x_, a.y_ + b.y_, a.d_);
}

QuadRational operator-(const QuadRational& a, const QuadRational& b) {
  QuadRational::require_same_radicand(a, b);
  return QuadRational(a.x_ - b.x_, a.y_ - b.y_, a.d_);
}

QuadRational operator*(const QuadRational& a, const QuadRational& b) {
  QuadRational::require_same_radicand(a, b);
  Rational d(Integer(static_cast<long>(a.d_)));
  return QuadRational(a.x_ * b.x_ + a.y_ * b.y_ * d, a.x_ * b.y_ + a.y_ * b.x_, a.d_);
}

QuadRational operator/(const QuadRational& a, const QuadRational& b) {
  QuadRational::require_same_radicand(a, b);
  return a * b.inverse();
}

bool operator==(const QuadRational& a, const QuadRational& b) {
  if (a.y_.is_zero() && b.y_.is_zero()) return a.x_ == b.x_;
  return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const QuadRational& q) : v_(Rational(0)) {
  if (q.surd_part().is_zero())
    v_ = q.rational_part();
  else
    v_ = q;
}

bool Scalar::is_zero() const {
  return is_rational() ? rational().is_zero() : quad().is_zero();
}

bool Scalar::is_one() const { return is_rational() && rational().is_one(); }

namespace {

QuadRational lift(const Rational& r, long long d) { return QuadRational(r, Rational(0), d); }

template <typename Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.is_rational() && b.is_rational()) return Scalar(op(a.rational(), b.rational()));
  if (!a.is_rational() && !b.is_rational()) return Scalar(op(a.quad(), b.quad()));
  if (a.is_rational()) return Scalar(op(lift(a.rational(), b.quad().radicand()), b.quad()));
  return Scalar(op(a.quad(), lift(b.rational(), a.quad().radicand())));
}

}  // namespace

Scalar Scalar::operator-() const {
  return is_rational() ? Scalar(-rational()) : Scalar(-quad());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;  // surd parts are never zero here
  if (a.is_rational()) return a.rational() == b.rational();
  return a.quad() == b.quad();
}

std::string Scalar::str() const { return format_scalar(*this); }

std::string format_scalar(const Scalar& s) {
  if (s.is_rational()) return s.rational().str();
  const QuadRational& q = s.quad();
  const Rational& y = q.surd_part();
  std::string out = q.rational_part().str();
  out += (y.sign() < 0) ? '-' : '+';
  out += (y.sign() < 0 ? -y : y).str();
  out += "*sqrt(";
  out += std::to_string(q.radicand());
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// pow

Rational rational_pow(const Integer& base, long long n) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n));
  if (n >= 0) return Rational(p);
  return Rational(Integer(1), p);  // throws if base == 0
}

Scalar pow(const Scalar& base, long long n) {
  if (n < 0) {
    if (base.is_zero()) throw std::domain_error("zero base with negative exponent");
    return pow(Scalar(1) / base, -n);
  }
  Scalar result(1);
  Scalar b = base;
  unsigned long long e = static_cast<unsigned long long>(n);
  while (e != 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error: " + what + " at position " +
                                std::to_string(pos) + " in \"" + std::string(s) + "\"");
  }

  Integer digits() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return Integer(std::string(s.substr(start, pos - start)), 10);
  }

  int sign_prefix() {
    int sign = 1;
    for (;;) {
      if (consume('+')) continue;
      if (consume('-')) {
        sign = -sign;
        continue;
      }
      return sign;
    }
  }

  // "p" or "p/q", unsigned
  Rational rational() {
    Integer num = digits();
    if (consume('/')) return Rational(num, digits());
    return Rational(num);
  }

  long long radicand() {
    if (!consume('(')) fail("expected '(' after sqrt");
    int sign = sign_prefix();
    Integer d = digits();
    if (!consume(')')) fail("expected ')'");
    if (!d.fits_slong_p()) fail("radicand out of range");
    long long v = sign * d.get_si();
    if (!valid_radicand(v)) fail("radicand must be a nonzero non-square integer");
    return v;
  }

  // one signed term: rational, sqrt(d), or coefficient [*] sqrt(d)
  Scalar term() {
    int sign = sign_prefix();
    Rational coef(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = rational();
      bool star = consume('*');
      if (!consume_word("sqrt")) {
        if (star) fail("expected sqrt after '*'");
        return Scalar(sign < 0 ? -coef : coef);
      }
    } else if (!consume_word("sqrt")) {
      fail("expected a number or sqrt(...)");
    }
    long long d = radicand();
    return Scalar(QuadRational(Rational(0), sign < 0 ? -coef : coef, d));
  }

  Scalar parse() {
    if (eof()) fail("empty input");
    Scalar value = term();
    while (!eof()) {
      char c = peek();
      if (c != '+' && c != '-') fail("unexpected character");
      value += term();  // term consumes the sign itself
    }
    return value;
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser{text}.parse(); }

// ---------------------------------------------------------------------------
// exact decimal rounding

namespace {

// sign of u - w*sqrt(d), for w >= 0, d > 0 non-square
int compare_to_surd(const Integer& u, const Integer& w, long long d) {
  if (sgn(w) == 0) return sgn(u);
  if (sgn(u) <= 0) return -1;
  Integer lhs = u * u;
  Integer rhs = w * w * Integer(static_cast<long>(d));
  return cmp(lhs, rhs);  // never 0: sqrt(d) is irrational
}

// floor((A + B*sqrt(d)) / Q) for Q > 0, d > 0 non-square
Integer floor_quad(const Integer& A, const Integer& B, const Integer& Q, long long d) {
  Integer s, b2d = B * B * Integer(static_cast<long>(d));
  mpz_sqrt(s.get_mpz_t(), b2d.get_mpz_t());
  // s <= |B|*sqrt(d) < s+1
  Integer low = (sgn(B) >= 0) ? Integer(A + s) : Integer(A - s - 1);
  Integer t;
  mpz_fdiv_q(t.get_mpz_t(), low.get_mpz_t(), Q.get_mpz_t());
  // raise while (t+1)*Q <= A + B*sqrt(d)
  for (int i = 0; i < 3; ++i) {
    Integer u = (t + 1) * Q - A;  // need u <= B*sqrt(d)
    bool le;
    if (sgn(B) >= 0)
      le = compare_to_surd(u, B, d) <= 0;
    else
      le = compare_to_surd(-u, -B, d) >= 0;  // u <= -|B|sqrt(d)  <=>  -u >= |B|sqrt(d)
    if (!le) break;
    t += 1;
  }
  return t;
}

// sign of x + y*sqrt(d), d > 0 non-square
int quad_sign(const Rational& x, const Rational& y, long long d) {
  if (y.is_zero()) return x.sign();
  if (x.is_zero()) return y.sign();
  if (x.sign() == y.sign()) return x.sign();
  Integer lhs = x.numerator() * x.numerator() * y.denominator() * y.denominator();
  Integer rhs = y.numerator() * y.numerator() * x.denominator() * x.denominator() *
                Integer(static_cast<long>(d));
  int c = cmp(lhs, rhs);
  return (c > 0) ? x.sign() : y.sign();
}

Integer pow10(unsigned digits) {
  Integer t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, digits);
  return t;
}

std::string with_point(const Integer& magnitude, unsigned digits, bool negative) {
  std::string body = magnitude.get_str();
  if (body.size() < digits + 1) body.insert(0, digits + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - digits, ".");
  return negative ? "-" + body : body;
}

// round(|x + y*sqrt(d)| * 10^digits) half away from zero; overall sign given
std::string round_real(const Rational& x, const Rational& y, long long d, unsigned digits) {
  int sign;
  Rational xs = x, ys = y;
  if (y.is_zero()) {
    sign = x.sign();
  } else {
    sign = quad_sign(x, y, d);
  }
  if (sign < 0) {
    xs = -x;
    ys = -y;
  }
  Integer T = pow10(digits);
  if (ys.is_zero()) {
    // floor((2*p*T + q) / (2*q))
    Integer num = 2 * xs.numerator() * T + xs.denominator();
    Integer den = 2 * xs.denominator();
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return with_point(r, digits, sign < 0);
  }
  // |v|*T + 1/2 = (A + B*sqrt(d)) / Q with Q = 2*qx*qy
  Integer qx = xs.denominator(), qy = ys.denominator();
  Integer A = 2 * xs.numerator() * qy * T + qx * qy;
  Integer B = 2 * ys.numerator() * qx * T;
  Integer Q = 2 * qx * qy;
  return with_point(floor_quad(A, B, Q, d), digits, sign < 0);
}

}  // namespace

std::string decimal_approx(const Scalar& s, unsigned digits) {
  if (s.is_rational()) return round_real(s.rational(), Rational(0), 2, digits);
  const QuadRational& q = s.quad();
  if (q.radicand() > 0)
    return round_real(q.rational_part(), q.surd_part(), q.radicand(), digits);
  // imaginary quadratic: value = x + (y*sqrt(|d|)) i
  std::string re = round_real(q.rational_part(), Rational(0), 2, digits);
  std::string im = round_real(Rational(0), q.surd_part(), -q.radicand(), digits);
  if (!im.empty() && im[0] == '-') return re + im + "i";
  return re + "+" + im + "i";
}

}  // namespace sylvester
