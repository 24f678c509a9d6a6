#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asymptotic_formulas.hpp"
#include "count_table.hpp"
#include "critical_point.hpp"
#include "dilog.hpp"
#include "enumerate.hpp"
#include "functional_equation.hpp"
#include "generating_functions.hpp"
#include "series_checks.hpp"
#include "series_eval.hpp"
#include "staircase.hpp"
#include "theta.hpp"

namespace seqfree {

/// One line of a verification suite.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string measured;
};

struct SuiteOptions {
  int k = 2;       // single k for the asymptotics suite
  int k_max = 5;   // largest k for identity, monotonicity and bijection sweeps
  int max_n = 60;  // size bound for monotonicity and the brute-force sweeps
};

namespace detail {

inline std::string sci(const real& x, int digits = 3) {
  return x.str(digits, std::ios_base::scientific);
}

inline std::string sci(double x) { return sci(real(x)); }

inline CheckResult from_report(const CheckReport& r) {
  std::string m = std::to_string(r.compared) + " coefficients";
  if (!r.passed()) {
    const auto& f = r.mismatches.front();
    m += ", " + std::to_string(r.mismatch_count) + " mismatches, first at z^" + std::to_string(f.i) +
         " q^" + std::to_string(f.j) + ": " + f.lhs.str() + " != " + f.rhs.str();
  }
  return {r.name, r.passed(), m};
}

inline std::vector<CheckResult> identities_suite(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const int bf_n = std::min(o.max_n, 30);
  for (int k = 2; k <= o.k_max; ++k) {
    const SequenceConstraint c(k, true);
    const int M = max_distinct_length(bf_n) + 1;
    const auto bf = count_brute_force(c, bf_n, M - 1);
    const auto dp = count_dp(c, bf_n, M - 1);
    const auto th = theorem1_series(k, M, bf_n + 1);
    out.push_back(from_report(compare_series("k=" + std::to_string(k) + " double series = DP",
                                             th, series_from_counts(dp, M, bf_n + 1))));
    out.push_back({"k=" + std::to_string(k) + " DP = brute force (n <= " + std::to_string(bf_n) + ")",
                   same_counts(bf, dp), ""});
  }
  out.push_back(from_report(compare_series("MacMahon = Andrews at k=2 (M=N=40)",
                                           macmahon_G2_series(40, 40),
                                           andrews_Gk_series(2, 40, 40))));
  for (int zp : {0, 1})
    out.push_back(from_report(compare_series(
        "Rogers-Ramanujan sum = product (z=q^" + std::to_string(zp) + ", N=300)",
        rr_sum_series(zp, 300), rr_product_series(zp, 300))));
  for (int k = 2; k <= o.k_max; ++k)
    for (const auto& r : qdiff_check(k, 30, 30)) out.push_back(from_report(r));
  for (int k : {2, 3}) out.push_back(from_report(fk_recurrence_check(k, 20, 60)));
  for (const Monomial& x : {Monomial{1, 0, 1}, Monomial{1, 1, 1}, Monomial{1, 0, 2}})
    for (auto r : euler_identity_check(x, x.z_power ? 30 : 1, x.z_power ? 30 : 100)) {
      r.name += ", x = " + std::string(x.z_power ? "z" : "") + "q^" + std::to_string(x.q_power);
      out.push_back(from_report(r));
    }
  return out;
}

inline std::vector<CheckResult> monotonicity_suite(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const int N = o.max_n;
  std::vector<CountTable> tables;
  for (int k = 1; k <= o.k_max + 1; ++k) tables.push_back(count_dp({k, true}, N, N));
  for (int k = 2; k <= o.k_max; ++k) {
    const auto& t = tables[k - 1];
    const auto& next = tables[k];
    std::size_t bad_k = 0, bad_n = 0, bad_total = 0;
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= N; ++n) {
        if (t.at(m, n) > next.at(m, n)) ++bad_k;
        if (m > 0 && n < N && t.at(m, n) > t.at(m, n + 1)) ++bad_n;
      }
    for (int n = 0; n < N; ++n)
      if (t.total(n) > t.total(n + 1)) ++bad_total;
    const std::string ks = std::to_string(k);
    out.push_back({"Q_" + ks + "(m,n) <= Q_" + std::to_string(k + 1) + "(m,n)", bad_k == 0,
                   std::to_string(bad_k) + " violations"});
    out.push_back({"Q_" + ks + "(m,n) <= Q_" + ks + "(m,n+1) for m >= 1", bad_n == 0,
                   std::to_string(bad_n) + " violations"});
    out.push_back({"Q_" + ks + "(n) <= Q_" + ks + "(n+1)", bad_total == 0,
                   std::to_string(bad_total) + " violations"});
  }
  // The empty partition has no successor, so the n-step fails at m = 0.
  if (N >= 1)
    out.push_back({"Q_2(0,0) = 1 > Q_2(0,1) = 0 (expected inequality failure at m = 0)",
                   tables[1].at(0, 0) == 1 && tables[1].at(0, 1) == 0, ""});
  // Repeated parts break the n-monotonicity: the inequality must fail here.
  const auto p2 = count_dp({2, false}, 3, 3);
  out.push_back({"p_2(2,2) = 1 > p_2(2,3) = 0 (expected inequality failure)",
                 p2.at(2, 2) == 1 && p2.at(2, 3) == 0,
                 "p_2(2,2)=" + p2.at(2, 2).str() + " p_2(2,3)=" + p2.at(2, 3).str()});

  const auto q = classical_partition_counts(N, true);
  const auto p = classical_partition_counts(N, false);
  std::size_t bad_vac = 0;
  for (int k = 2; k <= o.k_max; ++k) {
    const auto pk = count_totals({k, false}, N);
    for (int n = 0; n <= N && k * (k + 1) / 2 > n; ++n)
      if (tables[k - 1].total(n) != q[n] || pk[n] != p[n]) ++bad_vac;
  }
  out.push_back({"Q_k(n) = q(n), p_k(n) = p(n) when k(k+1)/2 > n", bad_vac == 0,
                 std::to_string(bad_vac) + " violations"});
  return out;
}

inline std::vector<CheckResult> bijection_suite(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const Partition example({15, 12, 11, 9, 8, 4, 2, 1});
  const auto image = staircase_forward(example, 3);
  out.push_back({"k=3 worked example", image == Partition({8, 6, 6, 5, 5, 2, 1, 1}) &&
                                           staircase_inverse(image, 3) == example,
                 example.to_string() + " -> " + image.to_string()});
  const int N = std::min(o.max_n, 30);
  for (int k = 2; k <= std::min(o.k_max, 4); ++k) {
    std::size_t checked = 0, bad = 0;
    std::set<std::pair<int, std::vector<int>>> seen;
    for (int n = 0; n <= N; ++n)
      for (const auto& lam : enumerate({k, true}, n)) {
        ++checked;
        const auto img = staircase_forward(lam, k);
        const long long m = lam.length();
        const bool ok = staircase_inverse(img, k) == lam && img.length() == lam.length() &&
                        lam.size() == img.size() + m * (m - 1) / 2 &&
                        img.max_multiplicity() <= k - 1 &&
                        seen.insert({n, img.parts()}).second;
        if (!ok) ++bad;
      }
    out.push_back({"k=" + std::to_string(k) + " round trip, bookkeeping, injectivity (n <= " +
                       std::to_string(N) + ")",
                   bad == 0 && checked > 0,
                   std::to_string(checked) + " partitions, " + std::to_string(bad) + " failures"});
  }
  return out;
}

inline std::vector<CheckResult> asymptotics_suite(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const int k = o.k;
  const auto c = asymptotic_constants(k);
  const auto root = find_wk(k);
  out.push_back({"h_k(w_k) root certificate", root.residual < real("1e-50") &&
                                                  h_k_eval(k, root.lo) > 0 && h_k_eval(k, root.hi) < 0,
                 "w_k=" + to_decimal(c.w, 20) + " |h|=" + sci(root.residual)});
  const real crit = c.w * (1 - pow(c.w, k)) / (1 - c.w) - 1;
  out.push_back({"critical point w(1-w^k)/(1-w) = 1", abs(crit) < real("1e-50"), sci(abs(crit))});
  out.push_back({"g_k'' < 0", c.g_dd < 0, "g''=" + to_decimal(c.g_dd, 20)});

  const auto exact = count_totals({k, true}, 2000);
  std::string table;
  bool decreasing = true;
  real prev = 10;
  for (int n : {250, 500, 1000, 2000}) {
    const real rel = abs(asym_Qk(c, n) / static_cast<real>(exact[n]) - 1);
    table += " n=" + std::to_string(n) + ":" + to_decimal(rel, 4);
    decreasing = decreasing && rel < prev;
    prev = rel;
  }
  out.push_back({"Q_k(n) main term: relative error decreasing, < 15% at n=2000",
                 decreasing && prev < real("0.15"), table});

  std::string rtable;
  std::vector<real> dev;
  for (const char* e : {"0.2", "0.1", "0.05"}) {
    const real eps(e);
    const real ratio = eval_series_real(k, eps).value.value / asym_Ck_near_1(c, eps);
    rtable += std::string(" eps=") + e + ":" + to_decimal(ratio, 8);
    dev.push_back(abs(ratio - 1));
  }
  out.push_back({"C_k(e^-eps) / main term approaches 1",
                 dev[2] < dev[1] && dev[1] < dev[0] && dev[2] < real("0.5"), rtable});
  return out;
}

inline std::vector<CheckResult> quadratures_suite(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (int k = 1; k <= o.k_max; ++k) {
    const double v = lambda_k_quadrature(k).value;
    const double err = std::abs(v - lambda_closed_form(k));
    out.push_back({"lambda_" + std::to_string(k) + " = pi^2/(3k(k+1))", err < 1e-6,
                   "|diff|=" + sci(err)});
  }
  const double g1 = gamma_k_quadrature(1).value;
  const double pi2_12 = boost::math::constants::pi_sqr<double>() / 12;
  out.push_back({"gamma_1 = pi^2/12", std::abs(g1 - pi2_12) < 1e-8,
                 "|diff|=" + sci(std::abs(g1 - pi2_12))});
  double prev = g1;
  bool mono = true;
  for (int k = 2; k <= std::max(4, std::min(o.k_max, 6)); ++k) {
    const double gk = gamma_k_quadrature(k).value;
    mono = mono && gk < prev && gk > 0;
    prev = gk;
    if (k <= 4) {
      const double diff = std::abs((g1 - gk) - static_cast<double>(gk_value(k)));
      out.push_back({"gamma_1 - gamma_" + std::to_string(k) + " = g_k(v_k)", diff < 1e-6,
                     "|diff|=" + sci(diff)});
    }
  }
  out.push_back({"gamma_k decreasing and positive", mono, ""});

  real worst = 0;
  for (int i = 1; i <= 9; ++i) {
    const real x = real(i) / 10;
    worst = std::max(worst, abs(dilog(x) + dilog(real(1 - x)) + log(x) * log(1 - x) -
                                pi_r() * pi_r() / 6));
  }
  out.push_back({"dilog reflection residual", worst < real("1e-30"), sci(worst)});
  for (auto [e, u] : {std::pair{"1", "0"}, std::pair{"0.5", "0"}, std::pair{"1", "0.1"}}) {
    const auto r = theta_inversion_check(real(e), real(u));
    out.push_back({std::string("theta inversion eps=") + e + " u=" + u,
                   r.discrepancy < real("1e-12"), sci(r.discrepancy)});
  }
  const auto qd = quantum_dilog_check(real("0.5"), {real("0.1"), real("0.05"), real("0.025"),
                                                    real("0.0125")});
  out.push_back({"quantum dilog remainder O(eps)", qd.bounded(), "spread " + to_decimal(qd.ratio_spread, 6)});
  return out;
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "monotonicity", "bijection",
                                              "asymptotics", "quadratures"};
  return names;
}

/// Runs a named suite; throws std::invalid_argument for an unknown name.
inline std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& o) {
  if (name == "identities") return detail::identities_suite(o);
  if (name == "monotonicity") return detail::monotonicity_suite(o);
  if (name == "bijection") return detail::bijection_suite(o);
  if (name == "asymptotics") return detail::asymptotics_suite(o);
  if (name == "quadratures") return detail::quadratures_suite(o);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace seqfree
