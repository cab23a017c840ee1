#include "sylvester/special_numbers.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace sylvester {

Integer binomial(unsigned long n, long long k) {
  if (k < 0 || static_cast<unsigned long long>(k) > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // triangle rows in place: {i,j} = j*{i-1,j} + {i-1,j-1}
  std::vector<Integer> row(n + 1);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j >= 1; --j) row[j] = Integer(static_cast<long>(j)) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BernoulliTable bernoulli(unsigned N) {
  BernoulliTable table;
  table.reserve(N + 1);
  table.push_back(Rational(1));
  for (unsigned n = 1; n <= N; ++n) {
    Rational acc(0);
    for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * table[k];
    table.push_back(-acc / Rational(Integer(static_cast<long>(n) + 1)));
  }
  return table;
}

std::vector<Rational> euler_at_zero(unsigned N) {
  std::vector<Rational> table;
  table.reserve(N + 1);
  table.push_back(Rational(1));
  for (unsigned n = 1; n <= N; ++n) {
    Rational acc(0);
    for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n, k)) * table[k];
    table.push_back(-acc / Rational(2));
  }
  return table;
}

namespace {

void require_lambda_not_one(const Scalar& lambda) {
  if (lambda.is_one())
    throw std::domain_error("Apostol-Bernoulli numbers are undefined at lambda = 1");
}

}  // namespace

ApostolBernoulliTable apostol_bernoulli(unsigned N, const Scalar& lambda) {
  require_lambda_not_one(lambda);
  // term_j = (-1)^j lambda^j (lambda-1)^{-j-1} j!, shared by all n
  std::vector<Scalar> term;
  if (N >= 1) {
    term.reserve(N);
    Scalar cur = Scalar(1) / (lambda - Scalar(1));  // j = 0
    for (unsigned j = 0; j + 1 <= N; ++j) {
      term.push_back(cur);
      cur = -cur * lambda / (lambda - Scalar(1)) * Scalar(Rational(Integer(static_cast<long>(j) + 1)));
    }
  }
  // Stirling triangle up to N-1
  std::vector<std::vector<Integer>> st(N >= 1 ? N : 1);
  st[0] = {Integer(1)};
  for (unsigned i = 1; i + 1 <= N; ++i) {
    st[i].assign(i + 1, Integer(0));
    for (unsigned j = 1; j <= i; ++j)
      st[i][j] = Integer(static_cast<long>(j)) * (j < st[i - 1].size() ? st[i - 1][j] : Integer(0)) +
                 st[i - 1][j - 1];
  }
  ApostolBernoulliTable table{lambda, {}};
  table.values.reserve(N + 1);
  table.values.push_back(Scalar(0));
  for (unsigned n = 1; n <= N; ++n) {
    Scalar acc(0);
    for (unsigned j = 0; j < n; ++j)
      if (st[n - 1][j] != 0) acc += term[j] * Scalar(Rational(st[n - 1][j]));
    table.values.push_back(acc * Scalar(Rational(Integer(static_cast<long>(n)))));
  }
  return table;
}

ApostolBernoulliTable apostol_bernoulli_by_recurrence(unsigned N, const Scalar& lambda) {
  require_lambda_not_one(lambda);
  ApostolBernoulliTable table{lambda, {}};
  table.values.reserve(N + 1);
  Scalar denom = lambda - Scalar(1);
  for (unsigned n = 0; n <= N; ++n) {
    Scalar acc(0);
    for (unsigned k = 0; k < n; ++k)
      acc += Scalar(Rational(binomial(n, k))) * table.values[k];
    Scalar lead = (n == 1) ? Scalar(1) : Scalar(0);
    table.values.push_back((lead - lambda * acc) / denom);
  }
  return table;
}

ApostolBernoulliTable apostol_bernoulli_cached(unsigned N, const Scalar& lambda) {
  static std::mutex mu;
  static std::map<std::string, ApostolBernoulliTable> cache;
  std::string key = format_scalar(lambda);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second.values.size() > N) {
      ApostolBernoulliTable out{it->second.lambda, {}};
      out.values.assign(it->second.values.begin(), it->second.values.begin() + N + 1);
      return out;
    }
  }
  ApostolBernoulliTable fresh = apostol_bernoulli(N, lambda);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, fresh);
  if (!inserted && it->second.values.size() < fresh.values.size()) it->second = fresh;
  return fresh;
}

}  // namespace sylvester
