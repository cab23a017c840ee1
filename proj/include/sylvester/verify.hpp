#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "sylvester/weighted_sums.hpp"

namespace sylvester {

struct SweepOptions {
  long long amax = 25;
  long long bmax = 25;
  unsigned mmax = 6;
  std::vector<Scalar> lambdas;  // empty -> default sample set
  long long oracle_cap = kDefaultOracleCap;
};

/// The default lambda sample: 2, 1/2, -1, -5/3, 5, sqrt(2), 1+sqrt(2).
std::vector<Scalar> default_lambda_set();

struct FamilyResult {
  std::string name;
  bool pass = true;
  long long cells = 0;     // checks performed
  std::string detail;      // first failure, if any
};

/// Runs every invariant family and reports one result per family:
///   three_way_equivalence  every applicable method + oracle agree per cell
///   symmetry               swapping (a,b) never changes the value
///   theorem_m_reduction    general closed form at m=1 equals the m=1 form
///   lambda2_form           m=1 form at lambda=2 equals its specialization
///   lambda1_consistency    derivative route at lambda=1 equals the classical forms
///   corollary_minus1       lambda=-1 closed forms for even a, odd b
///   structural             gap-set/polynomial identities (g = f*h, counts, ...)
///   special_tables         Apostol-Bernoulli/Bernoulli/Euler/Stirling cross-checks
///   degenerate_totality    a=1 or b=1 yields 0 from every route
std::vector<FamilyResult> run_verification(const SweepOptions& options);

struct BenchRow {
  Method method = Method::kAuto;
  std::chrono::microseconds elapsed{0};
  bool skipped = false;  // oracle beyond cap
  std::string value;
};

/// Times each method on one input; values of all non-skipped methods must
/// agree exactly (MethodDisagreement otherwise).
std::vector<BenchRow> run_bench(const CoprimePair& pair, unsigned m, const Scalar& lambda,
                                const std::vector<Method>& methods, long long oracle_cap);

}  // namespace sylvester
