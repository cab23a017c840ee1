#pragma once

#include <vector>

#include "sylvester/scalar.hpp"

namespace sylvester {

/// C(n, k); zero outside 0 <= k <= n.
Integer binomial(unsigned long n, long long k);

/// Stirling number of the second kind {n over k}, with {0 over 0} = 1 and
/// {n over 0} = 0 for n >= 1.
Integer stirling2(unsigned n, unsigned k);

/// B_0 .. B_N via the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 (n >= 1),
/// B_0 = 1.
using BernoulliTable = std::vector<Rational>;
BernoulliTable bernoulli(unsigned N);

/// Euler polynomial values E_0(0) .. E_N(0), from the generating-function
/// recurrence 2*E_n(0) + sum_{k<n} C(n,k) E_k(0) = 2*[n=0].
std::vector<Rational> euler_at_zero(unsigned N);

struct ApostolBernoulliTable {
  Scalar lambda;
  std::vector<Scalar> values;  // values[n] for n = 0..N
};

/// Apostol-Bernoulli numbers by the explicit Stirling-number formula
///   n * sum_{j=0}^{n-1} (-1)^j lambda^j (lambda-1)^{-j-1} j! {n-1 over j}.
/// Requires lambda != 1.
ApostolBernoulliTable apostol_bernoulli(unsigned N, const Scalar& lambda);

/// Same table by the generating-function recurrence
///   value_n = ([n=1] - lambda * sum_{k<n} C(n,k) value_k) / (lambda - 1);
/// kept as an independent route for cross-checking the explicit formula.
ApostolBernoulliTable apostol_bernoulli_by_recurrence(unsigned N, const Scalar& lambda);

/// Memoized front end over the explicit formula; tables are cached per
/// canonical lambda text and extended as larger N is requested. Thread-safe.
ApostolBernoulliTable apostol_bernoulli_cached(unsigned N, const Scalar& lambda);

}  // namespace sylvester
