#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "sylvester/scalar.hpp"
#include "sylvester/semigroup.hpp"

namespace sylvester {

enum class Method {
  kAuto,
  kTheorem1,
  kS2Closed,
  kDerivative,
  kTheoremM,
  kTheoremM1,
  kClassicalLambda1,
  kOracle,
  kAll,
};

std::string method_name(Method m);
Method method_from_name(const std::string& name);  // throws std::invalid_argument

inline constexpr long long kDefaultOracleCap = 1'000'000;  // on a*b

struct SumRequest {
  CoprimePair pair;
  unsigned m = 1;
  Scalar lambda = Scalar(1);
  Method method = Method::kAuto;
  long long oracle_cap = kDefaultOracleCap;
};

struct SumResult {
  Scalar value;
  Method method_used = Method::kAuto;
  std::chrono::microseconds elapsed{0};
  bool cross_checked = false;
};

/// Thrown by the method=all tripwire when two routes disagree; carries every
/// computed value.
class MethodDisagreement : public std::runtime_error {
 public:
  MethodDisagreement(const CoprimePair& pair, unsigned m, const Scalar& lambda,
                     std::vector<std::pair<Method, Scalar>> values);
  const std::vector<std::pair<Method, Scalar>>& values() const { return values_; }

 private:
  std::vector<std::pair<Method, Scalar>> values_;
};

/// Raised when direct enumeration is requested beyond the configured a*b cap.
class OracleCapExceeded : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Direct exact summation of lambda^{n-1} n^m over the gap set.
Scalar sum_oracle(const SumRequest& req);

/// Closed form for m = 1; requires lambda != 0, lambda^a != 1, lambda^b != 1.
Scalar sum_theorem1(const CoprimePair& pair, const Scalar& lambda);

/// Closed form for m = 2 built from the auxiliary combinations
/// X1 = (a+b)L^{a+b} - a L^a - b L^b and X2 = (a+b)^2 L^{a+b} - a^2 L^a - b^2 L^b.
Scalar sum_s2_closed(const CoprimePair& pair, const Scalar& lambda);

/// S_m via exact derivatives of the gap polynomial f:
/// m = 0 -> f(L)/L; otherwise sum_k {m over k} L^{k-1} f^(k)(L).
Scalar sum_derivative(const CoprimePair& pair, unsigned m, const Scalar& lambda);

/// General closed form in Apostol-Bernoulli numbers, for lambda^a != 1 and
/// lambda^b != 1 (any m >= 0).
Scalar sum_theorem_m(const CoprimePair& pair, unsigned m, const Scalar& lambda);

/// Closed form for the degenerate-power case: exactly one of lambda^a,
/// lambda^b equals 1 (the pair is swapped internally if needed).
Scalar sum_theorem_m1(const CoprimePair& pair, unsigned m, const Scalar& lambda);

/// The classical lambda = 1 values for m <= 2.
Rational sum_classical_lambda1(const CoprimePair& pair, unsigned m);

/// Alternating sum T_m = sum (-1)^n n^m over the gaps = -S_m at lambda = -1.
Scalar alternating_sum(const CoprimePair& pair, unsigned m);

/// Dispatcher. method=auto picks the cheapest applicable closed route;
/// method=all evaluates every applicable route plus the oracle (when under
/// the cap) and throws MethodDisagreement unless all agree exactly.
SumResult sylvester_sum(const SumRequest& req);

}  // namespace sylvester
