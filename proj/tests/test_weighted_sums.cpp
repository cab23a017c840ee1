#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "sylvester/weighted_sums.hpp"

using namespace sylvester;

namespace {

Scalar q(const char* text) { return parse_scalar(text); }

Scalar oracle(long long a, long long b, unsigned m, const Scalar& lambda) {
  SumRequest req{CoprimePair(a, b), m, lambda, Method::kOracle};
  return sum_oracle(req);
}

}  // namespace

TEST_CASE("oracle reproduces the worked expansions") {
  CHECK(oracle(3, 17, 1, Scalar(2)) == q("37515351605"));
  CHECK(oracle(4, 11, 1, Scalar(-1)) == Scalar(80));
  CHECK(oracle(4, 11, 2, Scalar(-1)) == Scalar(1870));
  CHECK(oracle(2, 3, 5, Scalar(7)) == Scalar(1));  // single gap n=1
  CHECK(oracle(1, 9, 4, Scalar(3)) == Scalar(0));
}

TEST_CASE("oracle cap") {
  SumRequest req{CoprimePair(1009, 1013), 1, Scalar(2), Method::kOracle, 1000};
  CHECK_THROWS_AS(sum_oracle(req), OracleCapExceeded);
  // degenerate pairs bypass enumeration entirely
  SumRequest deg{CoprimePair(1, 1013), 1, Scalar(2), Method::kOracle, 10};
  CHECK(sum_oracle(deg) == Scalar(0));
}

TEST_CASE("m=1 closed form on (3,17)") {
  CoprimePair p(3, 17);
  CHECK(sum_theorem1(p, Scalar(2)) == q("37515351605"));
  CHECK(sum_theorem1(p, Scalar(5)) == q("29081116749318487066136"));
  CHECK(sum_theorem1(p, q("1/2")) == q("3242812223/1073741824"));
  CHECK(sum_theorem1(p, Scalar(-1)) == Scalar(8));
  CHECK(sum_theorem1(p, q("-5/3")) == q("24148853362728398417944/205891132094649"));
  CHECK(sum_theorem1(p, q("sqrt(2)")) == q("1129197+255082*sqrt(2)"));
  CHECK(sum_theorem1(p, q("-sqrt(2)")) == q("1129197-255082*sqrt(2)"));
  for (const char* lam : {"2", "5", "1/2", "-1", "-5/3", "sqrt(2)", "-sqrt(2)"})
    CHECK(sum_theorem1(p, q(lam)) == oracle(3, 17, 1, q(lam)));
}

TEST_CASE("the m=2 sums reproduce the large published constants") {
  // these constants appear in print attached to m=1; every route here agrees
  // they are the m=2 values (see the m=1 checks above for the m=1 values)
  CoprimePair p(3, 17);
  CHECK(sum_s2_closed(p, Scalar(5)) == q("900879734470832437423896"));
  CHECK(sum_s2_closed(p, q("1/2")) == q("8822132865/1073741824"));
  CHECK(sum_s2_closed(p, Scalar(-1)) == Scalar(408));
  CHECK(sum_s2_closed(p, q("-5/3")) == q("760508529478902941119864/205891132094649"));
  CHECK(sum_s2_closed(p, q("sqrt(2)")) == q("34250061+6965604*sqrt(2)"));
  CHECK(sum_s2_closed(p, q("-sqrt(2)")) == q("34250061-6965604*sqrt(2)"));
  for (const char* lam : {"2", "5", "1/2", "-1", "-5/3", "sqrt(2)"})
    CHECK(sum_s2_closed(p, q(lam)) == oracle(3, 17, 2, q(lam)));
  CHECK(sum_s2_closed(CoprimePair(2, 3), Scalar(2)) == Scalar(1));
}

TEST_CASE("power degeneracy is rejected with a precise reason") {
  // lambda^a = 1 here, so the m=1/m=2 fraction forms do not apply
  CHECK_THROWS_AS(sum_theorem1(CoprimePair(4, 11), Scalar(-1)), std::domain_error);
  CHECK_THROWS_AS(sum_s2_closed(CoprimePair(4, 11), Scalar(-1)), std::domain_error);
  CHECK_THROWS_AS(sum_theorem_m(CoprimePair(4, 11), 2, Scalar(-1)), std::domain_error);
  CHECK_THROWS_AS(sum_theorem1(CoprimePair(3, 17), Scalar(1)), std::domain_error);
  // ... and the degenerate-power form handles it instead
  CHECK(sum_theorem_m1(CoprimePair(4, 11), 2, Scalar(-1)) == Scalar(1870));
}

TEST_CASE("derivative route") {
  CoprimePair p(3, 17);
  CHECK(sum_derivative(p, 1, q("sqrt(2)")) == q("1129197+255082*sqrt(2)"));
  CHECK(sum_derivative(p, 2, q("sqrt(2)")) == q("34250061+6965604*sqrt(2)"));
  CHECK(sum_derivative(p, 0, Scalar(1)) == Scalar(16));  // gap count
  CHECK(sum_derivative(p, 0, Scalar(2)) == q("1227142875"));
  CHECK(sum_derivative(p, 3, Scalar(2)) == q("35220630424481"));
  CHECK(sum_derivative(p, 3, Scalar(1)) == q("97296"));
  CHECK(sum_derivative(CoprimePair(5, 7), 6, q("1/2")) == q("42045543729/4194304"));
  for (unsigned m = 0; m <= 6; ++m)
    for (const char* lam : {"2", "1/2", "-1", "1", "sqrt(2)"})
      CHECK(sum_derivative(p, m, q(lam)) == oracle(3, 17, m, q(lam)));
}

TEST_CASE("general closed form, including m=0") {
  for (auto [a, b] : {std::pair<long long, long long>{2, 3}, {3, 4}, {3, 17}, {5, 7}})
    for (unsigned m = 0; m <= 5; ++m)
      for (const char* lam : {"2", "1/2", "5", "-5/3", "sqrt(2)", "1+sqrt(2)"})
        CHECK(sum_theorem_m(CoprimePair(a, b), m, q(lam)) == oracle(a, b, m, q(lam)));
  CHECK(sum_theorem_m(CoprimePair(3, 17), 1, Scalar(2)) == q("37515351605"));
  CHECK(sum_theorem_m(CoprimePair(2, 3), 0, Scalar(2)) == Scalar(1));
  // odd a and odd b keep lambda=-1 nondegenerate
  for (unsigned m = 0; m <= 4; ++m) {
    CHECK(sum_theorem_m(CoprimePair(3, 17), m, Scalar(-1)) == oracle(3, 17, m, Scalar(-1)));
    CHECK(sum_theorem_m(CoprimePair(5, 7), m, Scalar(-1)) == oracle(5, 7, m, Scalar(-1)));
  }
}

TEST_CASE("degenerate-power closed form") {
  CHECK(sum_theorem_m1(CoprimePair(4, 11), 1, Scalar(-1)) == Scalar(80));
  CHECK(sum_theorem_m1(CoprimePair(4, 11), 2, Scalar(-1)) == Scalar(1870));
  CHECK(sum_theorem_m1(CoprimePair(4, 11), 4, Scalar(-1)) == q("1259434"));
  CHECK(sum_theorem_m1(CoprimePair(2, 3), 1, Scalar(-1)) == Scalar(1));
  // swapped order: lambda^b = 1 and the pair is flipped internally
  CHECK(sum_theorem_m1(CoprimePair(11, 4), 1, Scalar(-1)) == Scalar(80));
  for (auto [a, b] : {std::pair<long long, long long>{4, 11}, {2, 3}, {6, 25}, {8, 3}})
    for (unsigned m = 0; m <= 4; ++m)
      CHECK(sum_theorem_m1(CoprimePair(a, b), m, Scalar(-1)) == oracle(a, b, m, Scalar(-1)));
  // fourth root of unity: lambda^4 = 1
  CHECK(sum_theorem_m1(CoprimePair(4, 7), 1, q("sqrt(-1)")) == q("42+18*sqrt(-1)"));
  CHECK(sum_theorem_m1(CoprimePair(4, 7), 2, q("sqrt(-1)")) == q("556+140*sqrt(-1)"));
  CHECK(sum_theorem_m1(CoprimePair(4, 9), 1, q("sqrt(-1)")) == q("-72+32*sqrt(-1)"));
  for (unsigned m = 0; m <= 3; ++m)
    CHECK(sum_theorem_m1(CoprimePair(4, 7), m, q("sqrt(-1)")) ==
          oracle(4, 7, m, q("sqrt(-1)")));
  // misuse is detected
  CHECK_THROWS_AS(sum_theorem_m1(CoprimePair(3, 17), 1, Scalar(2)), std::domain_error);
  CHECK_THROWS_AS(sum_theorem_m1(CoprimePair(4, 11), 1, Scalar(1)), std::domain_error);
}

TEST_CASE("classical values at lambda = 1") {
  CHECK(sum_classical_lambda1(CoprimePair(3, 17), 0) == Rational(16));
  CHECK(sum_classical_lambda1(CoprimePair(2, 3), 1) == Rational(1));
  CHECK(sum_classical_lambda1(CoprimePair(3, 4), 2) == Rational(30));  // 1+4+25
  CHECK_THROWS_AS(sum_classical_lambda1(CoprimePair(3, 4), 3), std::domain_error);
  for (long long a = 2; a <= 50; ++a)
    for (long long b = a + 1; b <= 50; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (unsigned m = 0; m <= 2; ++m)
        CHECK(Scalar(sum_classical_lambda1(CoprimePair(a, b), m)) ==
              sum_derivative(CoprimePair(a, b), m, Scalar(1)));
    }
}

TEST_CASE("alternating sums") {
  CHECK(alternating_sum(CoprimePair(4, 11), 1) == Scalar(-80));
  CHECK(alternating_sum(CoprimePair(3, 17), 1) == Scalar(-8));
  CHECK(alternating_sum(CoprimePair(3, 17), 2) == Scalar(-408));
  CHECK(alternating_sum(CoprimePair(2, 3), 0) == Scalar(-1));  // T_0 = (-1)^1
  for (auto [a, b] : {std::pair<long long, long long>{3, 17}, {4, 11}, {5, 6}})
    for (unsigned m = 0; m <= 3; ++m) {
      // direct signed summation as the oracle
      Scalar direct(0);
      for (long long n : gap_set(CoprimePair(a, b)).gaps) {
        Integer nm;
        mpz_ui_pow_ui(nm.get_mpz_t(), static_cast<unsigned long>(n), m);
        direct += (n % 2 == 0) ? Scalar(Rational(nm)) : Scalar(-Rational(nm));
      }
      CHECK(alternating_sum(CoprimePair(a, b), m) == direct);
    }
}

TEST_CASE("auto dispatch picks the documented route") {
  auto used = [](long long a, long long b, unsigned m, const char* lam) {
    SumRequest req{CoprimePair(a, b), m, q(lam), Method::kAuto};
    return sylvester_sum(req).method_used;
  };
  CHECK(used(3, 17, 1, "1") == Method::kClassicalLambda1);
  CHECK(used(3, 17, 2, "1") == Method::kClassicalLambda1);
  CHECK(used(3, 17, 3, "1") == Method::kDerivative);
  CHECK(used(4, 11, 1, "-1") == Method::kTheoremM1);
  CHECK(used(11, 4, 2, "-1") == Method::kTheoremM1);
  CHECK(used(3, 17, 1, "2") == Method::kTheorem1);
  CHECK(used(3, 17, 2, "2") == Method::kTheoremM);
  CHECK(used(3, 17, 5, "-5/3") == Method::kTheoremM);
  CHECK(used(3, 17, 0, "2") == Method::kDerivative);

  SumRequest req{CoprimePair(3, 17), 1, Scalar(2), Method::kAuto};
  SumResult r = sylvester_sum(req);
  CHECK(r.value == q("37515351605"));
  CHECK(!r.cross_checked);
}

TEST_CASE("dispatcher validates lambda") {
  SumRequest req{CoprimePair(3, 17), 1, Scalar(0), Method::kAuto};
  CHECK_THROWS_AS(sylvester_sum(req), std::domain_error);
}

TEST_CASE("method=all cross-checks every applicable route") {
  SumRequest req{CoprimePair(4, 11), 1, Scalar(-1), Method::kAll};
  SumResult r = sylvester_sum(req);
  CHECK(r.value == Scalar(80));
  CHECK(r.method_used == Method::kAll);
  CHECK(r.cross_checked);

  SumRequest deg{CoprimePair(1, 5), 3, Scalar(3), Method::kAll};
  CHECK(sylvester_sum(deg).value == Scalar(0));

  // beyond the cap the oracle is silently omitted; closed routes still agree
  SumRequest capped{CoprimePair(3, 17), 1, Scalar(2), Method::kAll, 10};
  SumResult rc = sylvester_sum(capped);
  CHECK(rc.value == q("37515351605"));
  CHECK(rc.cross_checked);  // theorem1, theorem_m and derivative all ran
}

TEST_CASE("every method is symmetric in the pair") {
  for (auto [a, b] : {std::pair<long long, long long>{3, 17}, {4, 11}, {5, 6}})
    for (unsigned m = 0; m <= 3; ++m)
      for (const char* lam : {"2", "-1", "1/2", "sqrt(2)", "1"}) {
        SumRequest fwd{CoprimePair(a, b), m, q(lam), Method::kAll};
        SumRequest rev{CoprimePair(b, a), m, q(lam), Method::kAll};
        CHECK(sylvester_sum(fwd).value == sylvester_sum(rev).value);
      }
}

TEST_CASE("degenerate pairs give zero from every route") {
  for (long long b : {1LL, 2LL, 7LL})
    for (unsigned m = 0; m <= 3; ++m)
      for (const char* lam : {"2", "-1", "1/2", "sqrt(2)", "1"}) {
        CoprimePair p(1, b);
        SumRequest req{p, m, q(lam), Method::kAll};
        CHECK(sylvester_sum(req).value == Scalar(0));
        CHECK(sum_theorem_m(p, m, q(lam)) == Scalar(0));
        CHECK(sum_derivative(p, m, q(lam)) == Scalar(0));
        if (m == 1) CHECK(sum_theorem1(p, q(lam)) == Scalar(0));
      }
}

TEST_CASE("three-way sweep on a compact grid") {
  for (long long a = 2; a <= 12; ++a)
    for (long long b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (unsigned m = 0; m <= 4; ++m)
        for (const char* lam : {"2", "1/2", "-1", "sqrt(2)", "1+sqrt(2)", "1"}) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(m);
          CAPTURE(lam);
          SumRequest req{CoprimePair(a, b), m, q(lam), Method::kAll};
          CHECK_NOTHROW(sylvester_sum(req));
        }
    }
}

TEST_CASE("reduction of the general form at m=1") {
  for (auto [a, b] : {std::pair<long long, long long>{2, 3}, {3, 17}, {5, 7}, {7, 12}})
    for (const char* lam : {"2", "1/2", "5", "-5/3", "sqrt(2)"})
      CHECK(sum_theorem_m(CoprimePair(a, b), 1, q(lam)) ==
            sum_theorem1(CoprimePair(a, b), q(lam)));
}

TEST_CASE("corollary forms for even a, odd b at lambda=-1") {
  for (long long a = 2; a <= 40; a += 2)
    for (long long b = 3; b <= 40; b += 2) {
      if (std::gcd(a, b) != 1) continue;
      CoprimePair p(a, b);
      Integer ia(static_cast<long>(a)), ib(static_cast<long>(b));
      CHECK(sum_theorem_m1(p, 1, Scalar(-1)) ==
            Scalar(Rational(Integer(ib * (ia * ib - ia - ib) + 1), Integer(4))));
      CHECK(sum_theorem_m1(p, 2, Scalar(-1)) ==
            Scalar(Rational(Integer(ia * ib * (ib - 1) * (2 * ia * ib - ia - 3 * ib)),
                            Integer(12))));
    }
}

TEST_CASE("disagreement exception carries every computed value") {
  MethodDisagreement e(CoprimePair(3, 17), 1, Scalar(2),
                       {{Method::kTheorem1, Scalar(5)}, {Method::kOracle, Scalar(7)}});
  std::string what = e.what();
  CHECK(what.find("a=3 b=17 m=1 lambda=2") != std::string::npos);
  CHECK(what.find("theorem1=5") != std::string::npos);
  CHECK(what.find("oracle=7") != std::string::npos);
  REQUIRE(e.values().size() == 2);
  CHECK(e.values()[0].second == Scalar(5));
}

TEST_CASE("method names round-trip") {
  for (Method m : {Method::kAuto, Method::kTheorem1, Method::kS2Closed, Method::kDerivative,
                   Method::kTheoremM, Method::kTheoremM1, Method::kClassicalLambda1,
                   Method::kOracle, Method::kAll})
    CHECK(method_from_name(method_name(m)) == m);
  CHECK_THROWS_AS(method_from_name("newton"), std::invalid_argument);
}
