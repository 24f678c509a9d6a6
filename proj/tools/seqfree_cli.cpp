// seqfree: counts, generating series, verification suites and asymptotics for
// partitions without k-sequences.
//
// Data goes to stdout (or --output), diagnostics to stderr.
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "seqfree/seqfree.hpp"

namespace {

using namespace seqfree;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

/// Thrown for parameter combinations the parser cannot reject on its own.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CommandConfig {
  int k = 2;
  int max_n = 60;
  std::optional<int> max_m;
  bool distinct = false;
  bool by_parts = false;
  std::string count_method = "dp";

  std::string series_method = "theorem1";
  std::optional<int> z_order;
  int q_order = 20;
  std::optional<std::string> z_value;

  std::string suite;
  std::optional<int> k_max;

  std::optional<long long> n;
  bool with_exact = false;
  bool constants_only = false;

  std::string format = "csv";
  std::string output;
};

void emit(const CommandConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + cfg.output + " for writing");
  f << text;
}

int cmd_count(const CommandConfig& cfg) {
  const SequenceConstraint c(cfg.k, cfg.distinct);
  const int max_m = cfg.max_m.value_or(cfg.max_n);
  if (max_m < 0) throw usage_error("--max-m must be nonnegative");
  const CountTable table = cfg.count_method == "brute"
                               ? count_brute_force(c, cfg.max_n, max_m)
                               : count_dp(c, cfg.max_n, max_m);
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["k"] = cfg.k;
    j["distinct"] = cfg.distinct;
    j["provenance"] = to_string(table.provenance());
    auto rows = nlohmann::ordered_json::array();
    for (int n = 0; n <= cfg.max_n; ++n) {
      if (cfg.by_parts) {
        for (int m = 0; m <= std::min(max_m, n); ++m)
          rows.push_back({{"m", m}, {"n", n}, {"count", table.at(m, n).str()}});
      } else {
        rows.push_back({{"n", n}, {"count", table.total(n).str()}});
      }
    }
    j["rows"] = std::move(rows);
    os << j.dump(1) << '\n';
  } else if (cfg.by_parts) {
    os << table.to_csv(/*include_zeros=*/true);
  } else {
    os << "k,n,count\n";
    for (int n = 0; n <= cfg.max_n; ++n) os << cfg.k << ',' << n << ',' << table.total(n).str() << '\n';
  }
  emit(cfg, os.str());
  return exit_ok;
}

int cmd_series(const CommandConfig& cfg) {
  const auto& method = cfg.series_method;
  const int N = cfg.q_order;
  if (N < 1) throw usage_error("--q-order must be >= 1");
  if ((method == "macmahon" || method == "rr-sum" || method == "rr-product") && cfg.k != 2)
    throw usage_error("--method " + method + " is defined for k = 2 only");
  if (cfg.k < 1) throw usage_error("--k must be >= 1");

  std::optional<int> z_shift;  // z -> q^shift
  if (cfg.z_value) z_shift = (*cfg.z_value == "1") ? 0 : 1;

  const bool distinct_family =
      method == "theorem1" || method == "rr-sum" || (method == "dp" && cfg.distinct);
  int M = cfg.z_order.value_or(z_shift && distinct_family ? distinct_z_order_for(N) : N);
  if (M < 1) throw usage_error("--z-order must be >= 1");

  TruncatedSeries s(1, 1);
  if (method == "theorem1") {
    s = theorem1_series(cfg.k, M, N);
  } else if (method == "andrews") {
    s = andrews_Gk_series(cfg.k, M, N);
  } else if (method == "macmahon") {
    s = macmahon_G2_series(M, N);
  } else if (method == "rr-sum") {
    if (z_shift) {
      s = rr_sum_series(*z_shift, N);
      z_shift.reset();
    } else {
      s = rr_sum_bivariate(M, N);
    }
  } else if (method == "rr-product") {
    if (!z_shift) throw usage_error("--method rr-product needs --z 1 or --z q");
    s = rr_product_series(*z_shift, N);
    z_shift.reset();
  } else {  // dp
    const auto t = count_dp({cfg.k, cfg.distinct}, N - 1, M - 1);
    s = series_from_counts(t, M, N);
  }
  if (z_shift) s = s.specialize_z(*z_shift);
  emit(cfg, series_to_json(s, cfg.k).dump() + "\n");
  return exit_ok;
}

int cmd_verify(const CommandConfig& cfg) {
  SuiteOptions o;
  o.k = cfg.k;
  if (cfg.k_max) o.k_max = *cfg.k_max;
  o.max_n = cfg.max_n;
  if (o.k < 2) throw usage_error("--k must be >= 2 for verification suites");
  if (o.k_max < 2) throw usage_error("--k-max must be >= 2");
  const auto results = run_suite(cfg.suite, o);
  std::ostringstream os;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    os << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.measured.empty()) os << "  [" << r.measured << "]";
    os << '\n';
  }
  os << (all ? "suite " + cfg.suite + ": all checks passed\n"
             : "suite " + cfg.suite + ": FAILED\n");
  emit(cfg, os.str());
  return all ? exit_ok : exit_check_failed;
}

int cmd_asym(const CommandConfig& cfg) {
  if (cfg.k < 2) throw usage_error("--k must be >= 2");
  const auto c = asymptotic_constants(cfg.k);
  if (cfg.constants_only) {
    emit(cfg, constants_to_json(c).dump(1) + "\n");
    return exit_ok;
  }
  if (!cfg.n) throw usage_error("--n is required unless --constants-only is given");
  const long long n = *cfg.n;
  if (n < 1) throw usage_error("--n must be >= 1");
  constexpr long long exact_budget = 5000;
  nlohmann::ordered_json j;
  j["k"] = cfg.k;
  j["n"] = n;
  const real a = asym_Qk(c, n);
  if (cfg.with_exact) {
    if (n > exact_budget)
      throw usage_error("--with-exact is limited to n <= " + std::to_string(exact_budget));
    const auto exact = count_totals({cfg.k, true}, static_cast<int>(n))[n];
    j["exact"] = exact.str();
    j["asymptotic"] = to_decimal(a, 30);
    j["ratio"] = to_decimal(a / static_cast<real>(exact), 30);
  } else {
    j["asymptotic"] = to_decimal(a, 30);
  }
  j["constants"] = constants_to_json(c);
  emit(cfg, j.dump(1) + "\n");
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitions without k-sequences: counts, series, checks, asymptotics"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto* count = app.add_subcommand("count", "Tabulate Q_k / p_k counts");
  count->add_option("--k", cfg.k, "Forbidden run length")->required()->check(CLI::PositiveNumber);
  count->add_option("--max-n", cfg.max_n, "Largest size n")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--max-m", cfg.max_m, "Largest number of parts m (default max-n)");
  count->add_flag("--distinct", cfg.distinct, "Forbid repeated parts (Q_k instead of p_k)");
  count->add_flag("--by-parts", cfg.by_parts, "Emit k,distinct,m,n,count rows");
  count->add_option("--method", cfg.count_method, "Counting method")
      ->check(CLI::IsMember({"dp", "brute"}));
  count->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  count->add_option("--output,-o", cfg.output, "Output path (default stdout)");

  auto* series = app.add_subcommand("series", "Emit a truncated generating series as JSON");
  series->add_option("--method", cfg.series_method, "Representation")
      ->check(CLI::IsMember({"theorem1", "andrews", "macmahon", "rr-sum", "rr-product", "dp"}));
  series->add_option("--k", cfg.k, "Forbidden run length");
  series->add_option("--z-order", cfg.z_order, "Exclusive bound on the z exponent");
  series->add_option("--q-order", cfg.q_order, "Exclusive bound on the q exponent");
  series->add_option("--z", cfg.z_value, "Specialize z to 1 or q")->check(CLI::IsMember({"1", "q"}));
  series->add_flag("--distinct", cfg.distinct, "dp method: distinct parts");
  series->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));
  series->add_option("--output,-o", cfg.output, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", cfg.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--k", cfg.k, "k for the asymptotics suite");
  verify->add_option("--k-max", cfg.k_max, "Largest k for sweeps");
  verify->add_option("--max-n", cfg.max_n, "Size bound for sweeps")->check(CLI::NonNegativeNumber);
  verify->add_option("--output,-o", cfg.output, "Output path (default stdout)");

  auto* asym = app.add_subcommand("asym", "Asymptotic main term and saddle-point constants");
  asym->add_option("--k", cfg.k, "Forbidden run length")->required();
  asym->add_option("--n", cfg.n, "Size n");
  asym->add_flag("--with-exact", cfg.with_exact, "Compare with the exact DP count");
  asym->add_flag("--constants-only", cfg.constants_only, "Only emit the constants");
  asym->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));
  asym->add_option("--output,-o", cfg.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (count->parsed()) return cmd_count(cfg);
    if (series->parsed()) return cmd_series(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (asym->parsed()) return cmd_asym(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_check_failed;
  }
  return exit_usage;
}
