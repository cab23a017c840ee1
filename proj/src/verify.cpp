#include "sylvester/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sylvester/special_numbers.hpp"

namespace sylvester {

std::vector<Scalar> default_lambda_set() {
  return {parse_scalar("2"),      parse_scalar("1/2"), parse_scalar("-1"),
          parse_scalar("-5/3"),   parse_scalar("5"),   parse_scalar("sqrt(2)"),
          parse_scalar("1+sqrt(2)")};
}

namespace {

std::string cell_text(const CoprimePair& pair, unsigned m, const Scalar& lambda) {
  std::ostringstream os;
  os << "a=" << pair.a() << " b=" << pair.b() << " m=" << m
     << " lambda=" << format_scalar(lambda);
  return os.str();
}

void record_failure(FamilyResult& family, const std::string& detail) {
  if (family.pass) family.detail = detail;
  family.pass = false;
}

template <typename Fn>
void for_coprime_pairs(long long amax, long long bmax, Fn fn) {
  for (long long a = 2; a <= amax; ++a)
    for (long long b = a + 1; b <= bmax; ++b)
      if (std::gcd(a, b) == 1) fn(CoprimePair(a, b));
}

FamilyResult check_three_way(const SweepOptions& opt, const std::vector<Scalar>& lambdas,
                             bool swapped_order) {
  FamilyResult family;
  family.name = swapped_order ? "symmetry" : "three_way_equivalence";
  for_coprime_pairs(opt.amax, opt.bmax, [&](const CoprimePair& pair) {
    for (unsigned m = 0; m <= opt.mmax; ++m) {
      for (const Scalar& lambda : lambdas) {
        ++family.cells;
        try {
          SumRequest req{pair, m, lambda, Method::kAll, opt.oracle_cap};
          SumResult straight = sylvester_sum(req);
          if (swapped_order) {
            SumRequest rev{pair.swapped(), m, lambda, Method::kAll, opt.oracle_cap};
            if (sylvester_sum(rev).value != straight.value)
              record_failure(family, "value changed under swap at " + cell_text(pair, m, lambda));
          }
        } catch (const MethodDisagreement& e) {
          record_failure(family, e.what());
        }
      }
    }
  });
  return family;
}

FamilyResult check_reduction(const SweepOptions& opt, const std::vector<Scalar>& lambdas) {
  FamilyResult family;
  family.name = "theorem_m_reduction";
  for_coprime_pairs(opt.amax, opt.bmax, [&](const CoprimePair& pair) {
    for (const Scalar& lambda : lambdas) {
      if (lambda.is_one() || pow(lambda, pair.a()).is_one() || pow(lambda, pair.b()).is_one())
        continue;
      ++family.cells;
      if (sum_theorem_m(pair, 1, lambda) != sum_theorem1(pair, lambda))
        record_failure(family, "m=1 reduction failed at " + cell_text(pair, 1, lambda));
    }
  });
  return family;
}

// the m=1 closed form specialized at lambda=2, written out independently
Scalar theorem1_at_two(const CoprimePair& pair) {
  const long long a = pair.a(), b = pair.b();
  const Rational two_a = rational_pow(2, a), two_b = rational_pow(2, b);
  const Rational two_ab = rational_pow(2, a * b);
  const Rational pa = two_a - Rational(1), pb = two_b - Rational(1);
  const Rational num = (two_ab - Rational(1)) *
                       (Rational(Integer(static_cast<long>(a + b))) * rational_pow(2, a + b) -
                        Rational(Integer(static_cast<long>(a))) * two_a -
                        Rational(Integer(static_cast<long>(b))) * two_b);
  return Scalar(Rational(1) +
                Rational(Integer(Integer(static_cast<long>(a)) * Integer(static_cast<long>(b)))) *
                    (two_ab / Rational(2)) / (pa * pb) -
                num / (Rational(2) * pa * pa * pb * pb));
}

FamilyResult check_lambda2_form(const SweepOptions& opt) {
  FamilyResult family;
  family.name = "lambda2_form";
  for_coprime_pairs(opt.amax, opt.bmax, [&](const CoprimePair& pair) {
    ++family.cells;
    if (sum_theorem1(pair, Scalar(2)) != theorem1_at_two(pair))
      record_failure(family, "lambda=2 specialization failed at a=" +
                                 std::to_string(pair.a()) + " b=" + std::to_string(pair.b()));
  });
  return family;
}

FamilyResult check_lambda1() {
  FamilyResult family;
  family.name = "lambda1_consistency";
  const long long bound = 50;
  for_coprime_pairs(bound, bound, [&](const CoprimePair& pair) {
    for (unsigned m = 0; m <= 2; ++m) {
      ++family.cells;
      if (sum_derivative(pair, m, Scalar(1)) != Scalar(sum_classical_lambda1(pair, m)))
        record_failure(family, "derivative vs classical at " + cell_text(pair, m, Scalar(1)));
    }
  });
  return family;
}

FamilyResult check_corollary_minus1() {
  FamilyResult family;
  family.name = "corollary_minus1";
  const Scalar minus_one(-1);
  for (long long a = 2; a <= 40; a += 2) {
    for (long long b = 3; b <= 40; b += 2) {
      if (std::gcd(a, b) != 1) continue;
      CoprimePair pair(a, b);
      const Integer ia(static_cast<long>(a)), ib(static_cast<long>(b));
      ++family.cells;
      if (sum_theorem_m1(pair, 1, minus_one) !=
          Scalar(Rational(ib * (ia * ib - ia - ib) + 1, Integer(4))))
        record_failure(family, "m=1 corollary failed at " + cell_text(pair, 1, minus_one));
      ++family.cells;
      if (sum_theorem_m1(pair, 2, minus_one) !=
          Scalar(Rational(ia * ib * (ib - 1) * (2 * ia * ib - ia - 3 * ib), Integer(12))))
        record_failure(family, "m=2 corollary failed at " + cell_text(pair, 2, minus_one));
    }
  }
  return family;
}

std::vector<long long> sieve_gaps(const CoprimePair& pair) {
  const long long limit = frobenius_number(pair);
  if (limit < 0) return {};
  std::vector<char> representable(static_cast<size_t>(limit) + 1, 0);
  for (long long s = 0; s * pair.a() <= limit; ++s)
    for (long long t = 0; s * pair.a() + t * pair.b() <= limit; ++t)
      representable[static_cast<size_t>(s * pair.a() + t * pair.b())] = 1;
  std::vector<long long> gaps;
  for (long long n = 1; n <= limit; ++n)
    if (!representable[static_cast<size_t>(n)]) gaps.push_back(n);
  return gaps;
}

std::vector<long long> multiply(const std::vector<long long>& p, const std::vector<long long>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<long long> out(p.size() + q.size() - 1, 0);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

FamilyResult check_structural() {
  FamilyResult family;
  family.name = "structural";
  const long long bound = 40;
  for_coprime_pairs(bound, bound, [&](const CoprimePair& pair) {
    const long long a = pair.a(), b = pair.b();
    GapSet gs = gap_set(pair);
    auto fail = [&](const std::string& what) {
      record_failure(family, what + " at a=" + std::to_string(a) + " b=" + std::to_string(b));
    };
    ++family.cells;
    if (static_cast<long long>(gs.gaps.size()) != (a - 1) * (b - 1) / 2) fail("gap count");
    ++family.cells;
    if (gs.gaps.back() != frobenius_number(pair)) fail("frobenius vs max gap");
    ++family.cells;
    if (gap_set(pair.swapped()).gaps != gs.gaps) fail("gap-set symmetry");
    ++family.cells;
    if (a * b <= 10'000 && sieve_gaps(pair) != gs.gaps) fail("sieve disagreement");
    // self-complementarity of the gap polynomial: c_n + c_{F-n} = 1
    GapPolynomial f = gap_polynomial(pair);
    const size_t len = f.coefficients.size();
    ++family.cells;
    for (size_t n = 0; n < len; ++n)
      if (f.coefficients[n] + f.coefficients[len - 1 - n] != 1) {
        fail("self-complementarity");
        break;
      }
    // f = g/h cleared of division
    auto [g, h] = gh_polynomials(pair);
    ++family.cells;
    if (multiply(f.coefficients, h) != g) fail("g != f*h");
    ++family.cells;
    if (static_cast<long long>(g.size()) - 1 != a * b - a - 1) fail("deg g");
    ++family.cells;
    if (static_cast<long long>(h.size()) - 1 != b - 1) fail("deg h");
  });
  return family;
}

FamilyResult check_special_tables(const std::vector<Scalar>& lambdas) {
  FamilyResult family;
  family.name = "special_tables";
  const unsigned N = 12;
  for (const Scalar& lambda : lambdas) {
    if (lambda.is_one()) continue;
    ApostolBernoulliTable explicit_form = apostol_bernoulli(N, lambda);
    ApostolBernoulliTable recurrence = apostol_bernoulli_by_recurrence(N, lambda);
    ++family.cells;
    if (explicit_form.values != recurrence.values)
      record_failure(family, "explicit != recurrence at lambda=" + format_scalar(lambda));
    // closed forms for n = 0..5
    const Scalar one(1);
    const Scalar d = lambda - one;
    const std::vector<Scalar> closed = {
        Scalar(0),
        one / d,
        -Scalar(2) * lambda / (d * d),
        Scalar(3) * lambda * (lambda + one) / (d * d * d),
        -Scalar(4) * lambda * (lambda * lambda + Scalar(4) * lambda + one) / (d * d * d * d),
        Scalar(5) * lambda *
            (lambda * lambda * lambda + Scalar(11) * lambda * lambda + Scalar(11) * lambda + one) /
            (d * d * d * d * d)};
    for (unsigned n = 0; n <= 5; ++n) {
      ++family.cells;
      if (explicit_form.values[n] != closed[n])
        record_failure(family, "closed form mismatch at n=" + std::to_string(n) +
                                   " lambda=" + format_scalar(lambda));
    }
  }
  // values at -1 against Euler polynomial values at 0
  {
    ApostolBernoulliTable at_minus_one = apostol_bernoulli(10, Scalar(-1));
    std::vector<Rational> euler = euler_at_zero(9);
    for (unsigned n = 1; n <= 10; ++n) {
      ++family.cells;
      Rational expected = Rational(Integer(-static_cast<long>(n))) * euler[n - 1] / Rational(2);
      if (at_minus_one.values[n] != Scalar(expected))
        record_failure(family, "Euler link failed at n=" + std::to_string(n));
    }
    ++family.cells;
    if (at_minus_one.values[0] != Scalar(0)) record_failure(family, "value at n=0 not 0");
  }
  // odd Bernoulli numbers vanish
  {
    BernoulliTable bern = bernoulli(20);
    for (unsigned n = 3; n <= 20; n += 2) {
      ++family.cells;
      if (!bern[n].is_zero()) record_failure(family, "B_" + std::to_string(n) + " != 0");
    }
  }
  // Stirling triangle recurrence against the alternating-sum formula
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      ++family.cells;
      Rational alt(0);
      for (unsigned j = 0; j <= k; ++j) {
        Integer jn;
        mpz_ui_pow_ui(jn.get_mpz_t(), j, n);
        Rational term = Rational(Integer(binomial(k, j) * jn));
        alt += ((k - j) % 2 == 0) ? term : -term;
      }
      Integer kfact;
      mpz_fac_ui(kfact.get_mpz_t(), k);
      if (Rational(stirling2(n, k)) != alt / Rational(kfact))
        record_failure(family, "stirling2(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
  return family;
}

FamilyResult check_degenerate(const SweepOptions& opt) {
  FamilyResult family;
  family.name = "degenerate_totality";
  const std::vector<Scalar> lambdas = {Scalar(2), Scalar(-1), parse_scalar("1/2"),
                                       parse_scalar("sqrt(2)"), Scalar(1)};
  for (long long b : {1LL, 2LL, 5LL, 9LL}) {
    for (const CoprimePair& pair : {CoprimePair(1, b), CoprimePair(b, 1)}) {
      for (const Scalar& lambda : lambdas) {
        for (unsigned m = 0; m <= 3; ++m) {
          ++family.cells;
          SumRequest req{pair, m, lambda, Method::kAll, opt.oracle_cap};
          try {
            if (sylvester_sum(req).value != Scalar(0))
              record_failure(family, "nonzero at " + cell_text(pair, m, lambda));
          } catch (const std::exception& e) {
            record_failure(family, std::string("throw at ") + cell_text(pair, m, lambda) + ": " +
                                       e.what());
          }
        }
      }
    }
  }
  return family;
}

}  // namespace

std::vector<FamilyResult> run_verification(const SweepOptions& options) {
  const std::vector<Scalar> lambdas =
      options.lambdas.empty() ? default_lambda_set() : options.lambdas;
  std::vector<FamilyResult> out;
  out.push_back(check_three_way(options, lambdas, /*swapped_order=*/false));
  out.push_back(check_three_way(options, lambdas, /*swapped_order=*/true));
  out.push_back(check_reduction(options, lambdas));
  out.push_back(check_lambda2_form(options));
  out.push_back(check_lambda1());
  out.push_back(check_corollary_minus1());
  out.push_back(check_structural());
  out.push_back(check_special_tables(lambdas));
  out.push_back(check_degenerate(options));
  return out;
}

std::vector<BenchRow> run_bench(const CoprimePair& pair, unsigned m, const Scalar& lambda,
                                const std::vector<Method>& methods, long long oracle_cap) {
  std::vector<BenchRow> rows;
  std::vector<std::pair<Method, Scalar>> values;
  for (Method method : methods) {
    BenchRow row;
    row.method = method;
    if (method == Method::kOracle && pair.a() > oracle_cap / pair.b()) {
      row.skipped = true;
      rows.push_back(row);
      continue;
    }
    SumRequest req{pair, m, lambda, method, oracle_cap};
    SumResult r = sylvester_sum(req);
    row.elapsed = r.elapsed;
    row.value = format_scalar(r.value);
    rows.push_back(row);
    values.emplace_back(method, r.value);
  }
  for (const auto& [method, value] : values)
    if (value != values.front().second) throw MethodDisagreement(pair, m, lambda, values);
  return rows;
}

}  // namespace sylvester
