#include "sylvester/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace sylvester {

CoprimePair::CoprimePair(long long a, long long b) : a_(a), b_(b) {
  if (a < 1 || b < 1) throw std::invalid_argument("generators must be positive");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("generators must be coprime");
}

long long representation_count(long long n, const CoprimePair& pair) {
  if (n < 0) return 0;
  long long count = 0;
  for (long long s = 0; s * pair.a() <= n; ++s)
    if ((n - s * pair.a()) % pair.b() == 0) ++count;
  return count;
}

namespace {

long long mod_inverse(long long x, long long mod) {
  // extended gcd; gcd(x, mod) == 1 by construction
  long long r0 = mod, r1 = x % mod, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  return ((t0 % mod) + mod) % mod;
}

}  // namespace

GapSet gap_set(const CoprimePair& pair) {
  GapSet out{pair, {}};
  if (pair.degenerate()) return out;
  const long long a = pair.a(), b = pair.b();
  out.gaps.reserve(static_cast<size_t>((a - 1) * (b - 1) / 2));
  const long long binv = mod_inverse(b % a, a);
  for (long long r = 1; r < a; ++r) {
    const long long s = static_cast<long long>(
        (static_cast<unsigned __int128>(r) * static_cast<unsigned __int128>(binv)) % a);
    const long long count =
        static_cast<long long>((static_cast<__int128>(b) * s - r) / a);
    for (long long k = 0; k < count; ++k) out.gaps.push_back(a * k + r);
  }
  std::sort(out.gaps.begin(), out.gaps.end());
  return out;
}

long long frobenius_number(const CoprimePair& pair) {
  return (pair.a() - 1) * (pair.b() - 1) - 1;
}

GapPolynomial gap_polynomial(const CoprimePair& pair) {
  GapPolynomial out{pair, {}};
  if (pair.degenerate()) return out;  // f == 0
  const long long degree = frobenius_number(pair);  // ab - a - b
  out.coefficients.assign(static_cast<size_t>(degree) + 1, 0);
  for (long long n : gap_set(pair).gaps) out.coefficients[static_cast<size_t>(n)] = 1;
  return out;
}

std::pair<std::vector<long long>, std::vector<long long>> gh_polynomials(
    const CoprimePair& pair) {
  const long long a = pair.a(), b = pair.b();
  std::vector<long long> h(static_cast<size_t>(b), 1);
  std::vector<long long> g;
  if (pair.degenerate()) return {g, h};  // g == 0 alongside f == 0
  g.assign(static_cast<size_t>(a * b - a - 1) + 1, 0);
  // each k contributes the geometric block x^k + ... + x^{ak-1}
  for (long long k = 1; k < b; ++k)
    for (long long e = k; e < a * k; ++e) ++g[static_cast<size_t>(e)];
  return {g, h};
}

Scalar poly_derivative_eval(std::span<const long long> coefficients, unsigned k,
                            const Scalar& lambda) {
  const long long degree = static_cast<long long>(coefficients.size()) - 1;
  if (degree < static_cast<long long>(k)) return Scalar(0);
  // falling factorial (n)_k, maintained down from n = degree
  Integer fall = 1;
  for (unsigned i = 0; i < k; ++i) fall *= static_cast<long>(degree - i);
  Scalar acc(0);
  for (long long n = degree; n >= static_cast<long long>(k); --n) {
    acc *= lambda;
    if (coefficients[static_cast<size_t>(n)] != 0)
      acc += Scalar(Rational(Integer(fall * static_cast<long>(coefficients[static_cast<size_t>(n)]))));
    if (n > static_cast<long long>(k)) {
      fall *= static_cast<long>(n - k);
      mpz_divexact_ui(fall.get_mpz_t(), fall.get_mpz_t(), static_cast<unsigned long>(n));
    }
  }
  return acc;
}

}  // namespace sylvester
