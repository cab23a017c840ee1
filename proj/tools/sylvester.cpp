// Command-line front end: gap sets, exact weighted sums, special-number
// tables, the cross-validation sweep, and a closed-form vs enumeration
// benchmark. Exit codes: 0 success, 2 input error, 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sylvester/special_numbers.hpp"
#include "sylvester/verify.hpp"
#include "sylvester/weighted_sums.hpp"

using nlohmann::json;
using namespace sylvester;

namespace {

std::vector<Scalar> parse_lambda_list(const std::string& list) {
  std::vector<Scalar> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  if (out.empty()) throw std::invalid_argument("empty lambda list");
  return out;
}

std::vector<CoprimePair> parse_pair_list(const std::string& list) {
  std::vector<CoprimePair> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto x = item.find('x');
    if (x == std::string::npos) throw std::invalid_argument("pair must look like 101x103");
    out.emplace_back(std::stoll(item.substr(0, x)), std::stoll(item.substr(x + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty pair list");
  return out;
}

int cmd_gaps(long long a, long long b, bool as_json) {
  CoprimePair pair(a, b);
  GapSet gs = gap_set(pair);
  if (as_json) {
    json record{{"command", "gaps"}, {"a", a},
                {"b", b},           {"gaps", gs.gaps},
                {"count", gs.gaps.size()}, {"frobenius", frobenius_number(pair)}};
    std::cout << record.dump() << "\n";
    return 0;
  }
  std::cout << "gaps:";
  for (long long n : gs.gaps) std::cout << ' ' << n;
  std::cout << "\ncount: " << gs.gaps.size() << "\nfrobenius: " << frobenius_number(pair)
            << "\n";
  return 0;
}

int cmd_sum(long long a, long long b, unsigned m, const std::string& lambda_text,
            const std::string& method_text, long long cap, int decimal, bool as_json) {
  SumRequest req{CoprimePair(a, b), m, parse_scalar(lambda_text),
                 method_from_name(method_text), cap};
  SumResult result = sylvester_sum(req);
  std::string value = format_scalar(result.value);
  if (as_json) {
    json record{{"command", "sum"},
                {"a", a},
                {"b", b},
                {"m", m},
                {"lambda", format_scalar(req.lambda)},
                {"value", value},
                {"method_used", method_name(result.method_used)},
                {"elapsed_microseconds", result.elapsed.count()},
                {"cross_checked", result.cross_checked}};
    if (decimal >= 0)
      record["decimal_approx"] = decimal_approx(result.value, static_cast<unsigned>(decimal));
    std::cout << record.dump() << "\n";
    return 0;
  }
  std::cout << value << "\n";
  if (decimal >= 0)
    std::cout << "approx: " << decimal_approx(result.value, static_cast<unsigned>(decimal))
              << " (rounded to " << decimal << " digits)\n";
  return 0;
}

int cmd_table(const std::string& command, unsigned n, const Scalar* lambda, bool as_json) {
  std::vector<std::string> values;
  if (lambda != nullptr)
    for (const Scalar& v : apostol_bernoulli(n, *lambda).values) values.push_back(format_scalar(v));
  else
    for (const Rational& v : bernoulli(n)) values.push_back(v.str());
  if (as_json) {
    json record{{"command", command}, {"n", n}, {"values", values}};
    if (lambda != nullptr) record["lambda"] = format_scalar(*lambda);
    std::cout << record.dump() << "\n";
    return 0;
  }
  for (const std::string& v : values) std::cout << v << "\n";
  return 0;
}

int cmd_verify(const SweepOptions& options, bool as_json) {
  std::vector<FamilyResult> families = run_verification(options);
  bool all_pass = true;
  if (as_json) {
    json list = json::array();
    for (const FamilyResult& f : families) {
      all_pass = all_pass && f.pass;
      list.push_back(
          {{"name", f.name}, {"pass", f.pass}, {"cells", f.cells}, {"detail", f.detail}});
    }
    std::cout << json{{"command", "verify"}, {"families", list}, {"pass", all_pass}}.dump()
              << "\n";
  } else {
    for (const FamilyResult& f : families) {
      all_pass = all_pass && f.pass;
      std::cout << (f.pass ? "PASS " : "FAIL ") << f.name << " (" << f.cells << " checks)";
      if (!f.pass) std::cout << ": " << f.detail;
      std::cout << "\n";
    }
    std::cout << (all_pass ? "all families passed" : "verification FAILED") << "\n";
  }
  return all_pass ? 0 : 3;
}

int cmd_bench(const std::string& pairs_text, unsigned m, const std::string& lambda_text,
              long long cap, bool as_json) {
  Scalar lambda = parse_scalar(lambda_text);
  const std::vector<Method> methods = {Method::kTheoremM, Method::kDerivative, Method::kOracle};
  json list = json::array();
  for (const CoprimePair& pair : parse_pair_list(pairs_text)) {
    std::vector<BenchRow> rows = run_bench(pair, m, lambda, methods, cap);
    for (const BenchRow& row : rows) {
      if (as_json) {
        list.push_back({{"a", pair.a()},
                        {"b", pair.b()},
                        {"m", m},
                        {"lambda", format_scalar(lambda)},
                        {"method", method_name(row.method)},
                        {"skipped", row.skipped},
                        {"elapsed_microseconds", row.elapsed.count()}});
      } else {
        std::cout << pair.a() << "x" << pair.b() << "  " << method_name(row.method) << "  ";
        if (row.skipped)
          std::cout << "skipped (beyond oracle cap)";
        else
          std::cout << row.elapsed.count() << " us";
        std::cout << "\n";
      }
    }
  }
  if (as_json) std::cout << json{{"command", "bench"}, {"rows", list}}.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weighted power sums over the nonrepresentable set of two coprime generators"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  long long oracle_cap = kDefaultOracleCap;
  app.add_flag("--json", as_json, "emit one JSON object per invocation");
  app.add_option("--oracle-cap", oracle_cap, "a*b limit for direct enumeration")
      ->capture_default_str();

  long long a = 0, b = 0;
  unsigned m = 1;
  std::string lambda_text = "1";
  std::string method_text = "auto";
  int decimal = -1;

  CLI::App* gaps = app.add_subcommand("gaps", "list the nonrepresentable set of a pair");
  gaps->add_option("a", a, "first generator")->required();
  gaps->add_option("b", b, "second generator")->required();

  CLI::App* sum = app.add_subcommand("sum", "exact weighted sum over the gaps");
  sum->add_option("a", a, "first generator")->required();
  sum->add_option("b", b, "second generator")->required();
  sum->add_option("--m", m, "power of n in the summand")->capture_default_str();
  sum->add_option("--lambda", lambda_text, "weight base, e.g. 2, -5/3, sqrt(2)")->required();
  sum->add_option("--method", method_text,
                  "auto|theorem1|s2_closed|derivative|theorem_m|theorem_m1|"
                  "classical_lambda1|oracle|all")
      ->capture_default_str();
  sum->add_option("--decimal", decimal, "append an approximation with this many digits");

  unsigned table_n = 10;
  std::string table_lambda;
  CLI::App* apostol = app.add_subcommand("apostol", "Apostol-Bernoulli number table");
  apostol->add_option("--n", table_n, "table size")->capture_default_str();
  apostol->add_option("--lambda", table_lambda, "table parameter (must not be 1)")->required();

  CLI::App* bern = app.add_subcommand("bernoulli", "Bernoulli number table");
  bern->add_option("--n", table_n, "table size")->capture_default_str();

  SweepOptions sweep;
  std::string lambdas_text;
  CLI::App* verify = app.add_subcommand("verify", "run the cross-validation sweep");
  verify->add_option("--amax", sweep.amax, "sweep bound on a")->capture_default_str();
  verify->add_option("--bmax", sweep.bmax, "sweep bound on b")->capture_default_str();
  verify->add_option("--mmax", sweep.mmax, "sweep bound on m")->capture_default_str();
  verify->add_option("--lambdas", lambdas_text, "comma-separated lambda list");

  std::string pairs_text = "101x103";
  CLI::App* bench = app.add_subcommand("bench", "time closed forms against enumeration");
  bench->add_option("--pairs", pairs_text, "comma-separated AxB list")->capture_default_str();
  bench->add_option("--m", m, "power of n in the summand")->capture_default_str();
  bench->add_option("--lambda", lambda_text, "weight base")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(gaps)) return cmd_gaps(a, b, as_json);
    if (app.got_subcommand(sum))
      return cmd_sum(a, b, m, lambda_text, method_text, oracle_cap, decimal, as_json);
    if (app.got_subcommand(apostol)) {
      Scalar lambda = parse_scalar(table_lambda);
      if (lambda.is_one())
        throw std::domain_error(
            "lambda = 1: these numbers are undefined there (and do not equal the "
            "classical Bernoulli numbers); see the bernoulli subcommand");
      return cmd_table("apostol", table_n, &lambda, as_json);
    }
    if (app.got_subcommand(bern)) return cmd_table("bernoulli", table_n, nullptr, as_json);
    if (app.got_subcommand(verify)) {
      if (!lambdas_text.empty()) sweep.lambdas = parse_lambda_list(lambdas_text);
      sweep.oracle_cap = oracle_cap;
      return cmd_verify(sweep, as_json);
    }
    if (app.got_subcommand(bench))
      return cmd_bench(pairs_text, m, lambda_text, oracle_cap, as_json);
  } catch (const MethodDisagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
