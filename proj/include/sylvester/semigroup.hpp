#pragma once

#include <span>
#include <vector>

#include "sylvester/scalar.hpp"

namespace sylvester {

/// Validated generator pair: a, b >= 1 with gcd(a, b) = 1.
class CoprimePair {
 public:
  CoprimePair(long long a, long long b);
  long long a() const { return a_; }
  long long b() const { return b_; }
  /// True when a = 1 or b = 1: every positive integer is representable.
  bool degenerate() const { return a_ == 1 || b_ == 1; }
  CoprimePair swapped() const { return CoprimePair(b_, a_); }
  friend bool operator==(const CoprimePair& p, const CoprimePair& q) {
    return p.a_ == q.a_ && p.b_ == q.b_;
  }

 private:
  long long a_, b_;
};

struct GapSet {
  CoprimePair pair;
  std::vector<long long> gaps;  // strictly increasing
};

/// Coefficients c_n = 1 - r(n) for n = 0 .. ab-a-b; each c_n is 0 or 1 and
/// c_n = 1 exactly on the gap set. Empty for degenerate pairs.
struct GapPolynomial {
  CoprimePair pair;
  std::vector<long long> coefficients;
};

/// Number of representations n = s*a + t*b with s, t >= 0.
long long representation_count(long long n, const CoprimePair& pair);

/// The nonrepresentable set, enumerated per residue class mod a: for each
/// residue r pick s with b*s = r (mod a); the gaps in that class are
/// a*k + r for 0 <= k <= (b*s - r)/a - 1.
GapSet gap_set(const CoprimePair& pair);

/// (a-1)(b-1) - 1; equals -1 for degenerate pairs (empty gap set sentinel).
long long frobenius_number(const CoprimePair& pair);

GapPolynomial gap_polynomial(const CoprimePair& pair);

/// The numerator/denominator pair with f = g/h as polynomials:
/// g = sum_{k=1}^{b-1} (x^k + ... + x^{ak-1}), h = 1 + x + ... + x^{b-1}.
std::pair<std::vector<long long>, std::vector<long long>> gh_polynomials(const CoprimePair& pair);

/// Exact k-th derivative of the integer polynomial at lambda, by Horner over
/// falling-factorial-weighted coefficients.
Scalar poly_derivative_eval(std::span<const long long> coefficients, unsigned k,
                            const Scalar& lambda);

}  // namespace sylvester
