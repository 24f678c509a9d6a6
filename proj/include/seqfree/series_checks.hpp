#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "generating_functions.hpp"
#include "truncated_series.hpp"

namespace seqfree {

struct Mismatch {
  int i;
  int j;
  big_int lhs;
  big_int rhs;
};

/// Outcome of a coefficient-wise identity comparison.
struct CheckReport {
  std::string name;
  std::size_t compared = 0;
  std::size_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // first few only

  bool passed() const noexcept { return mismatch_count == 0; }

  std::string summary() const {
    std::string s = name + ": " + (passed() ? "pass" : "FAIL") + " (" + std::to_string(compared) +
                    " coefficients";
    if (!passed()) {
      const auto& m = mismatches.front();
      s += ", " + std::to_string(mismatch_count) + " mismatches, first at z^" +
           std::to_string(m.i) + " q^" + std::to_string(m.j) + ": " + m.lhs.str() +
           " != " + m.rhs.str();
    }
    return s + ")";
  }
};

inline constexpr std::size_t max_recorded_mismatches = 16;

/// Compares every coefficient in the common box.
inline CheckReport compare_series(std::string name, const TruncatedSeries& lhs,
                                  const TruncatedSeries& rhs) {
  if (lhs.z_order() != rhs.z_order() || lhs.q_order() != rhs.q_order())
    throw std::invalid_argument("compared series must share truncation orders");
  CheckReport r{std::move(name)};
  for (int i = 0; i < lhs.z_order(); ++i)
    for (int j = 0; j < lhs.q_order(); ++j) {
      ++r.compared;
      auto a = lhs.coeff(i, j), b = rhs.coeff(i, j);
      if (a != b) {
        if (r.mismatches.size() < max_recorded_mismatches) r.mismatches.push_back({i, j, a, b});
        ++r.mismatch_count;
      }
    }
  return r;
}

/// Checks both Euler expansions for the monomial x = c z^a q^b:
///   1/(x;q)_inf = sum x^n/(q;q)_n   and   (x;q)_inf = sum (-1)^n x^n q^{n(n-1)/2}/(q;q)_n.
inline std::vector<CheckReport> euler_identity_check(const Monomial& x, int z_order, int q_order) {
  if (x.z_power < 0 || x.q_power < 0)
    throw std::invalid_argument("monomial exponents must be nonnegative");
  if (x.z_power == 0 && x.q_power == 0)
    throw std::domain_error("Euler sums do not truncate for a constant monomial");
  const int M = z_order, N = q_order;
  const PochhammerSpec prod{x, 1, std::nullopt};

  TruncatedSeries sum1(M, N), sum2(M, N);
  detail::qcoeffs inv(N);
  inv[0] = 1;
  big_int cpow = 1;
  for (long long n = 0; n * x.z_power < M && n * x.q_power < N; ++n) {
    if (n > 0) {
      if (n < N) detail::divide_one_minus(inv, static_cast<int>(n));
      cpow *= x.coeff;
    }
    const int i = static_cast<int>(n * x.z_power);
    const long long e = n * x.q_power;
    auto term = inv;
    for (auto& t : term) t *= cpow;
    detail::add_slice(sum1, i, e, term, 1);
    detail::add_slice(sum2, i, e + n * (n - 1) / 2, term, n % 2 == 0 ? 1 : -1);
  }
  return {compare_series("1/(x;q)_inf = sum x^n/(q;q)_n", expand_reciprocal(prod, M, N), sum1),
          compare_series("(x;q)_inf = sum (-1)^n x^n q^(n(n-1)/2)/(q;q)_n", expand(prod, M, N),
                         sum2)};
}

/// Checks the two q-difference equations of the distinct-part generating function C:
///   C(z) = sum_{j<k} z^j q^{j(j+1)/2} C(z q^{j+1})
///   C(z) - zq C(zq) = C(zq) - z^k q^{k(k+1)/2} C(z q^{k+1}).
/// Substitutions only raise q-degrees, so the whole box is comparable.
inline std::vector<CheckReport> qdiff_check(int k, const TruncatedSeries& c) {
  if (k < 2) throw std::invalid_argument("q-difference check needs k >= 2");
  TruncatedSeries rhs(c.z_order(), c.q_order());
  for (int j = 0; j < k; ++j) rhs += c.substitute_z_scale(j + 1).shifted(j, j * (j + 1) / 2);

  const auto cq = c.substitute_z_scale(1);
  const auto two_lhs = c - cq.shifted(1, 1);
  const auto two_rhs = cq - c.substitute_z_scale(k + 1).shifted(k, k * (k + 1) / 2);
  return {compare_series("k=" + std::to_string(k) + " run-length q-difference", c, rhs),
          compare_series("k=" + std::to_string(k) + " two-term q-difference", two_lhs, two_rhs)};
}

inline std::vector<CheckReport> qdiff_check(int k, int z_order, int q_order) {
  return qdiff_check(k, theorem1_series(k, z_order, q_order));
}

/// gamma_n(q) = sum_{kj+r=n} (-1)^j q^{r(r+1)/2 + krj + k(k+1)j^2/2} / ((q^k;q^k)_j (q;q)_r),
/// computed directly from its defining sum. Univariate.
inline TruncatedSeries gamma_direct(int k, int n, int q_order) {
  if (k < 1 || n < 0) throw std::invalid_argument("gamma_direct needs k >= 1, n >= 0");
  const int N = q_order;
  TruncatedSeries acc(1, N);
  const auto inv_q = detail::reciprocal_finite_products(1, n + 1, N);
  const auto inv_k = detail::reciprocal_finite_products(k, n / k + 1, N);
  for (int j = 0; k * j <= n; ++j) {
    const long long r = n - static_cast<long long>(k) * j;
    const long long e = r * (r + 1) / 2 + static_cast<long long>(k) * r * j +
                        static_cast<long long>(k) * (k + 1) * j * j / 2;
    if (e >= N) continue;
    detail::add_slice(acc, 0, e, detail::convolve(inv_k[j], inv_q[r], N), j % 2 == 0 ? 1 : -1);
  }
  return acc;
}

/// Verifies gamma_0 = 1 and, for 1 <= n < z_order, the recurrence of the z^n slices
///   (1 - q^n) gamma_n = q^n gamma_{n-1} - q^{(k+1)(n-k) + k(k+1)/2} gamma_{n-k}
/// (the last term only when n >= k).
inline CheckReport fk_recurrence_check(int k, const TruncatedSeries& f) {
  if (k < 2) throw std::invalid_argument("recurrence check needs k >= 2");
  const int M = f.z_order(), N = f.q_order();
  TruncatedSeries lhs(M, N), rhs(M, N);
  rhs.set(0, 0, 1);
  for (int j = 0; j < N; ++j) lhs.set(0, j, f.coeff(0, j));
  for (int n = 1; n < M; ++n) {
    auto g = f.z_slice(n);
    if (n < N) detail::multiply_one_minus(g, n);
    detail::add_slice(lhs, n, 0, g, 1);
    detail::add_slice(rhs, n, n, f.z_slice(n - 1), 1);
    if (n >= k)
      detail::add_slice(rhs, n, static_cast<long long>(k + 1) * (n - k) + k * (k + 1) / 2,
                        f.z_slice(n - k), -1);
  }
  return compare_series("k=" + std::to_string(k) + " z-slice recurrence", lhs, rhs);
}

inline CheckReport fk_recurrence_check(int k, int z_order, int q_order) {
  return fk_recurrence_check(k, theorem1_series(k, z_order, q_order));
}

}  // namespace seqfree
