#include "sylvester/weighted_sums.hpp"

#include <array>
#include <sstream>

#include "sylvester/special_numbers.hpp"

namespace sylvester {

std::string method_name(Method m) {
  switch (m) {
    case Method::kAuto: return "auto";
    case Method::kTheorem1: return "theorem1";
    case Method::kS2Closed: return "s2_closed";
    case Method::kDerivative: return "derivative";
    case Method::kTheoremM: return "theorem_m";
    case Method::kTheoremM1: return "theorem_m1";
    case Method::kClassicalLambda1: return "classical_lambda1";
    case Method::kOracle: return "oracle";
    case Method::kAll: return "all";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  static const std::array<Method, 9> all = {
      Method::kAuto,      Method::kTheorem1,  Method::kS2Closed,
      Method::kDerivative, Method::kTheoremM, Method::kTheoremM1,
      Method::kClassicalLambda1, Method::kOracle, Method::kAll};
  for (Method m : all)
    if (method_name(m) == name) return m;
  throw std::invalid_argument("unknown method: " + name);
}

MethodDisagreement::MethodDisagreement(const CoprimePair& pair, unsigned m,
                                       const Scalar& lambda,
                                       std::vector<std::pair<Method, Scalar>> values)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "method disagreement at a=" << pair.a() << " b=" << pair.b() << " m=" << m
           << " lambda=" << format_scalar(lambda);
        for (const auto& [method, value] : values)
          os << "; " << method_name(method) << "=" << format_scalar(value);
        return os.str();
      }()),
      values_(std::move(values)) {}

namespace {

void require_nonzero_lambda(const Scalar& lambda) {
  if (lambda.is_zero()) throw std::domain_error("lambda must be nonzero");
}

void require_lambda_not_one(const Scalar& lambda) {
  if (lambda.is_one()) throw std::domain_error("lambda = 1 is not handled by this form");
}

struct Powers {
  Scalar la, lb;   // lambda^a, lambda^b
  Scalar lab;      // lambda^{ab}
};

Powers lambda_powers(const CoprimePair& pair, const Scalar& lambda) {
  Powers p{pow(lambda, pair.a()), pow(lambda, pair.b()), Scalar(1)};
  p.lab = pow(p.la, pair.b());
  return p;
}

void require_nondegenerate_powers(const Powers& p) {
  if (p.la.is_one()) throw std::domain_error("lambda^a = 1: use theorem_m1 / derivative");
  if (p.lb.is_one()) throw std::domain_error("lambda^b = 1: use theorem_m1 / derivative");
}

Scalar integer_scalar(long long v) { return Scalar(Rational(Integer(static_cast<long>(v)))); }

}  // namespace

Scalar sum_oracle(const SumRequest& req) {
  require_nonzero_lambda(req.lambda);
  const CoprimePair& pair = req.pair;
  if (pair.degenerate()) return Scalar(0);
  if (pair.a() > req.oracle_cap / pair.b())
    throw OracleCapExceeded("a*b exceeds the enumeration cap of " +
                            std::to_string(req.oracle_cap));
  GapSet gs = gap_set(pair);
  Scalar acc(0);
  Scalar power = pow(req.lambda, gs.gaps.front() - 1);
  long long prev = gs.gaps.front();
  for (long long n : gs.gaps) {
    power *= pow(req.lambda, n - prev);
    prev = n;
    Integer nm;
    mpz_ui_pow_ui(nm.get_mpz_t(), static_cast<unsigned long>(n), req.m);
    acc += power * Scalar(Rational(nm));
  }
  return acc;
}

Scalar sum_theorem1(const CoprimePair& pair, const Scalar& lambda) {
  require_nonzero_lambda(lambda);
  if (pair.degenerate()) return Scalar(0);
  Powers p = lambda_powers(pair, lambda);
  require_nondegenerate_powers(p);
  const Scalar a = integer_scalar(pair.a()), b = integer_scalar(pair.b());
  const Scalar one(1);
  const Scalar pa = p.la - one, pb = p.lb - one;
  const Scalar x1 = (a + b) * p.la * p.lb - a * p.la - b * p.lb;
  return one / ((lambda - one) * (lambda - one))
       + a * b * (p.lab / lambda) / (pa * pb)
       - (p.lab - one) * x1 / (lambda * pa * pa * pb * pb);
}

Scalar sum_s2_closed(const CoprimePair& pair, const Scalar& lambda) {
  require_nonzero_lambda(lambda);
  if (pair.degenerate()) return Scalar(0);
  require_lambda_not_one(lambda);
  Powers p = lambda_powers(pair, lambda);
  require_nondegenerate_powers(p);
  const Scalar a = integer_scalar(pair.a()), b = integer_scalar(pair.b());
  const Scalar one(1);
  const Scalar pa = p.la - one, pb = p.lb - one;
  const Scalar lab1 = p.lab - one;
  const Scalar x1 = (a + b) * p.la * p.lb - a * p.la - b * p.lb;
  const Scalar x2 = (a + b) * (a + b) * p.la * p.lb - a * a * p.la - b * b * p.lb;
  const Scalar lm1 = lambda - one;
  return -(lambda + one) / (lm1 * lm1 * lm1)
       + a * a * b * b * (p.lab / lambda) / (pa * pb)
       - (Scalar(2) * a * b * p.lab * x1 + lab1 * x2) / (lambda * pa * pa * pb * pb)
       + Scalar(2) * lab1 * x1 * x1 / (lambda * pa * pa * pa * pb * pb * pb);
}

Scalar sum_derivative(const CoprimePair& pair, unsigned m, const Scalar& lambda) {
  require_nonzero_lambda(lambda);
  if (pair.degenerate()) return Scalar(0);
  GapPolynomial f = gap_polynomial(pair);
  if (m == 0) return poly_derivative_eval(f.coefficients, 0, lambda) / lambda;
  // n^m = sum_k {m over k} (n)_k turns the power sum into derivative values
  Scalar acc(0);
  for (unsigned k = 1; k <= m; ++k)
    acc += Scalar(Rational(stirling2(m, k))) * pow(lambda, static_cast<long long>(k) - 1) *
           poly_derivative_eval(f.coefficients, k, lambda);
  return acc;
}

Scalar sum_theorem_m(const CoprimePair& pair, unsigned m, const Scalar& lambda) {
  require_nonzero_lambda(lambda);
  if (pair.degenerate()) return Scalar(0);
  require_lambda_not_one(lambda);
  Powers p = lambda_powers(pair, lambda);
  require_nondegenerate_powers(p);
  const long long a = pair.a(), b = pair.b();
  const ApostolBernoulliTable ta = apostol_bernoulli_cached(m + 2, p.la);
  const ApostolBernoulliTable tb = apostol_bernoulli_cached(m + 2, p.lb);
  const ApostolBernoulliTable tl = apostol_bernoulli_cached(m + 1, lambda);

  Scalar first(0);
  for (unsigned l = 0; l <= m; ++l) {
    for (unsigned i = 0; i <= l + 2; ++i) {
      Rational coef = Rational(Integer(binomial(l + 2, i) * binomial(m, l))) /
                      Rational(Integer(Integer(static_cast<long>(l) + 1) * Integer(static_cast<long>(l) + 2)));
      coef *= rational_pow(Integer(static_cast<long>(a)),
                           static_cast<long long>(m) - l + i - 1);
      coef *= rational_pow(Integer(static_cast<long>(b)), static_cast<long long>(m) - i + 1);
      if (coef.is_zero()) continue;
      first += Scalar(coef) * ta.values[i] * tb.values[l - i + 2];
    }
  }
  first *= p.lab / lambda;

  Scalar second(0);
  for (unsigned i = 0; i <= m + 2; ++i) {
    Rational coef = Rational(binomial(m + 2, i));
    coef *= rational_pow(Integer(static_cast<long>(a)), static_cast<long long>(i) - 1);
    coef *= rational_pow(Integer(static_cast<long>(b)), static_cast<long long>(m) - i + 1);
    second += Scalar(coef) * ta.values[i] * tb.values[m - i + 2];
  }
  second /= Scalar(Rational(Integer(Integer(static_cast<long>(m) + 1) *
                                    Integer(static_cast<long>(m) + 2)))) * lambda;

  Scalar third = tl.values[m + 1] / (Scalar(Rational(Integer(static_cast<long>(m) + 1))) * lambda);
  return first - second - third;
}

Scalar sum_theorem_m1(const CoprimePair& pair, unsigned m, const Scalar& lambda) {
  require_nonzero_lambda(lambda);
  if (pair.degenerate()) return Scalar(0);
  require_lambda_not_one(lambda);
  Scalar la = pow(lambda, pair.a());
  Scalar lb = pow(lambda, pair.b());
  long long a = pair.a(), b = pair.b();
  if (la.is_one() && lb.is_one())
    throw std::domain_error("lambda^a = lambda^b = 1 cannot happen for coprime a, b");
  if (lb.is_one()) {  // S_m is symmetric in (a, b)
    std::swap(a, b);
    std::swap(la, lb);
  }
  if (!la.is_one())
    throw std::domain_error("neither lambda^a nor lambda^b is 1: use theorem_m");

  const BernoulliTable bern = bernoulli(m + 1);
  const ApostolBernoulliTable tb = apostol_bernoulli_cached(m + 1, lb);
  const ApostolBernoulliTable tl = apostol_bernoulli_cached(m + 1, lambda);

  Scalar acc(0);
  for (unsigned l = 0; l <= m + 1; ++l) {
    for (unsigned i = 0; i <= l; ++i) {
      Rational coef = Rational(Integer(binomial(m + 1, l) * binomial(l, i))) /
                      Rational(Integer(Integer(static_cast<long>(m) - l + 2) *
                                        Integer(static_cast<long>(m) + 1)));
      coef *= rational_pow(Integer(static_cast<long>(a)),
                           static_cast<long long>(m) - l + i + 1);
      coef *= rational_pow(Integer(static_cast<long>(b)), static_cast<long long>(m) - i + 1);
      coef *= bern[i];
      if (coef.is_zero()) continue;
      acc += Scalar(coef) * tb.values[l - i];
    }
  }
  acc /= lambda;
  return acc - tl.values[m + 1] /
                   (Scalar(Rational(Integer(static_cast<long>(m) + 1))) * lambda);
}

Rational sum_classical_lambda1(const CoprimePair& pair, unsigned m) {
  const Integer a(static_cast<long>(pair.a())), b(static_cast<long>(pair.b()));
  switch (m) {
    case 0: return Rational((a - 1) * (b - 1), 2);
    case 1: return Rational((a - 1) * (b - 1) * (2 * a * b - a - b - 1), 12);
    case 2: return Rational((a - 1) * (b - 1) * a * b * (a * b - a - b), 12);
    default:
      throw std::domain_error("no classical closed form at lambda = 1 for m >= 3; "
                              "use the derivative method");
  }
}

Scalar alternating_sum(const CoprimePair& pair, unsigned m) {
  SumRequest req{pair, m, Scalar(-1), Method::kAuto};
  return -sylvester_sum(req).value;
}

namespace {

Scalar run_method(Method method, const SumRequest& req) {
  switch (method) {
    case Method::kTheorem1: return sum_theorem1(req.pair, req.lambda);
    case Method::kS2Closed: return sum_s2_closed(req.pair, req.lambda);
    case Method::kDerivative: return sum_derivative(req.pair, req.m, req.lambda);
    case Method::kTheoremM: return sum_theorem_m(req.pair, req.m, req.lambda);
    case Method::kTheoremM1: return sum_theorem_m1(req.pair, req.m, req.lambda);
    case Method::kClassicalLambda1: return Scalar(sum_classical_lambda1(req.pair, req.m));
    case Method::kOracle: return sum_oracle(req);
    default: throw std::invalid_argument("not a direct method: " + method_name(method));
  }
}

Method resolve_auto(const SumRequest& req) {
  if (req.lambda.is_one())
    return req.m <= 2 ? Method::kClassicalLambda1 : Method::kDerivative;
  if (pow(req.lambda, req.pair.a()).is_one() || pow(req.lambda, req.pair.b()).is_one())
    return Method::kTheoremM1;
  if (req.m >= 2) return Method::kTheoremM;
  if (req.m == 1) return Method::kTheorem1;
  return Method::kDerivative;
}

SumResult run_all(const SumRequest& req) {
  const Scalar la = pow(req.lambda, req.pair.a());
  const Scalar lb = pow(req.lambda, req.pair.b());
  const bool lambda_one = req.lambda.is_one();
  const bool powers_ok = !lambda_one && !la.is_one() && !lb.is_one();
  const bool one_degenerate = !lambda_one && (la.is_one() != lb.is_one());
  const bool oracle_ok = req.pair.a() <= req.oracle_cap / req.pair.b();

  std::vector<std::pair<Method, Scalar>> values;
  if (oracle_ok) values.emplace_back(Method::kOracle, sum_oracle(req));
  values.emplace_back(Method::kDerivative, sum_derivative(req.pair, req.m, req.lambda));
  if (lambda_one && req.m <= 2)
    values.emplace_back(Method::kClassicalLambda1, Scalar(sum_classical_lambda1(req.pair, req.m)));
  if (powers_ok && req.m == 1)
    values.emplace_back(Method::kTheorem1, sum_theorem1(req.pair, req.lambda));
  if (powers_ok && req.m == 2)
    values.emplace_back(Method::kS2Closed, sum_s2_closed(req.pair, req.lambda));
  if (powers_ok)
    values.emplace_back(Method::kTheoremM, sum_theorem_m(req.pair, req.m, req.lambda));
  if (one_degenerate)
    values.emplace_back(Method::kTheoremM1, sum_theorem_m1(req.pair, req.m, req.lambda));

  for (const auto& [method, value] : values)
    if (value != values.front().second)
      throw MethodDisagreement(req.pair, req.m, req.lambda, values);

  SumResult out;
  out.value = values.front().second;
  out.method_used = Method::kAll;
  out.cross_checked = values.size() >= 2;
  return out;
}

}  // namespace

SumResult sylvester_sum(const SumRequest& req) {
  require_nonzero_lambda(req.lambda);
  const auto start = std::chrono::steady_clock::now();
  SumResult out;
  if (req.method == Method::kAll) {
    out = run_all(req);
  } else {
    Method chosen = (req.method == Method::kAuto) ? resolve_auto(req) : req.method;
    out.value = run_method(chosen, req);
    out.method_used = chosen;
    out.cross_checked = false;
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace sylvester
