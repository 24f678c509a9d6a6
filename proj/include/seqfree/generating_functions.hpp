#pragma once

#include <stdexcept>
#include <vector>

#include "count_table.hpp"
#include "truncated_series.hpp"

namespace seqfree {

namespace detail {

using qcoeffs = std::vector<big_int>;

// p /= (1 - q^e), in place on a length-N coefficient vector.
inline void divide_one_minus(qcoeffs& p, int e) {
  for (std::size_t j = e; j < p.size(); ++j)
    if (p[j - e] != 0) p[j] += p[j - e];
}

// p *= (1 - q^e).
inline void multiply_one_minus(qcoeffs& p, int e) {
  for (std::size_t j = p.size(); j-- > static_cast<std::size_t>(e);)
    if (p[j - e] != 0) p[j] -= p[j - e];
}

// 1/(q^step; q^step)_n for n = 0..count-1, each truncated to N coefficients.
inline std::vector<qcoeffs> reciprocal_finite_products(int step, int count, int N) {
  std::vector<qcoeffs> out;
  out.reserve(count);
  qcoeffs cur(N);
  cur[0] = 1;
  for (int n = 0; n < count; ++n) {
    if (n > 0 && static_cast<long long>(step) * n < N) divide_one_minus(cur, step * n);
    out.push_back(cur);
  }
  return out;
}

// s += sign * z^i q^offset * p, clipped to the box.
inline void add_slice(TruncatedSeries& s, int i, long long offset, const qcoeffs& p, int sign) {
  if (i >= s.z_order() || offset >= s.q_order()) return;
  for (int j = 0; j + offset < s.q_order() && j < static_cast<int>(p.size()); ++j)
    if (p[j] != 0) s.add(i, static_cast<int>(j + offset), sign > 0 ? p[j] : big_int(-p[j]));
}

inline qcoeffs convolve(const qcoeffs& a, const qcoeffs& b, int N) {
  qcoeffs r(N);
  for (int i = 0; i < N && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j < N && j < static_cast<int>(b.size()); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline long long tri(long long n) { return n * (n + 1) / 2; }

}  // namespace detail

/// Smallest z-order M with M(M+1)/2 >= N: every term of the distinct-part
/// series with z^i, i >= M, then has q-degree >= N.
inline int distinct_z_order_for(int q_order) {
  int m = 1;
  while (detail::tri(m) < q_order) ++m;
  return m;
}

/// Double series for the generating function of Q_k(m,n):
///   sum_{j,r>=0} (-1)^j z^{kj+r} q^{(r+kj)(r+kj+1)/2 + k j(j-1)/2} / ((q^k;q^k)_j (q;q)_r).
///
/// Evaluated as sum_j X_j / (q^k;q^k)_j by Horner's rule in j, where X_j
/// collects the r-sum; each step divides by one factor (1 - q^{k(j+1)}).
inline TruncatedSeries theorem1_series(int k, int z_order, int q_order) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int M = z_order, N = q_order;
  int r_count = 0;
  while (r_count < M && detail::tri(r_count) < N) ++r_count;
  const auto inv_q = detail::reciprocal_finite_products(1, r_count, N);

  // Largest j whose leading term z^{kj} q^{kj(kj+1)/2 + kj(j-1)/2} is inside the box.
  int J = -1;
  for (int j = 0;; ++j) {
    const long long i = static_cast<long long>(k) * j;
    if (i >= M || detail::tri(i) + static_cast<long long>(k) * j * (j - 1) / 2 >= N) break;
    J = j;
  }

  TruncatedSeries acc(M, N);
  for (int j = J; j >= 0; --j) {
    if (j < J) acc.divide_binomial(-1, 0, k * (j + 1));
    const int sign = (j % 2 == 0) ? 1 : -1;
    const long long base = static_cast<long long>(k) * j * (j - 1) / 2;
    for (int r = 0; r < r_count; ++r) {
      const long long i = static_cast<long long>(k) * j + r;
      const long long e = detail::tri(i) + base;
      if (i >= M || e >= N) break;
      detail::add_slice(acc, static_cast<int>(i), e, inv_q[r], sign);
    }
  }
  return acc;
}

/// Generating function of p_k(m,n) as the prefactor 1/(zq;q)_inf times
///   sum_{r,s>=0} (-1)^r z^{kr+(k+1)s} q^{k(k+1)(r+s)^2/2 + (k+1)s(s+1)/2}
///                / ((q^k;q^k)_r (q^{k+1};q^{k+1})_s).
inline TruncatedSeries andrews_Gk_series(int k, int z_order, int q_order) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int M = z_order, N = q_order;
  const long long kk = static_cast<long long>(k) * (k + 1) / 2;

  int rs_max = 0;  // r + s < rs_max keeps the exponent inside the box
  while (kk * rs_max * rs_max < N) ++rs_max;
  const auto inv_k = detail::reciprocal_finite_products(k, rs_max, N);
  const auto inv_k1 = detail::reciprocal_finite_products(k + 1, rs_max, N);

  TruncatedSeries acc(M, N);
  for (int r = 0; r < rs_max; ++r)
    for (int s = 0; r + s < rs_max; ++s) {
      const long long i = static_cast<long long>(k) * r + static_cast<long long>(k + 1) * s;
      const long long e = kk * (r + s) * (r + s) + static_cast<long long>(k + 1) * s * (s + 1) / 2;
      if (i >= M || e >= N) continue;
      detail::add_slice(acc, static_cast<int>(i), e,
                        detail::convolve(inv_k[r], inv_k1[s], N - static_cast<int>(e)),
                        r % 2 == 0 ? 1 : -1);
    }
  if (M > 1)
    for (int t = 1; t < N; ++t) acc.divide_binomial(-1, 1, t);
  return acc;
}

/// Generating function of p_2(m,n):
///   1 + sum_{n>=1} z^n q^n (q^6;q^6)_{n-1} / ((1-q^n)(q^2;q^2)_{n-1}(q^3;q^3)_{n-1}).
inline TruncatedSeries macmahon_G2_series(int z_order, int q_order) {
  const int M = z_order, N = q_order;
  auto acc = TruncatedSeries::one(M, N);
  // u holds (q^6;q^6)_{n-1} / ((q^2;q^2)_{n-1} (q^3;q^3)_{n-1}).
  detail::qcoeffs u(N);
  u[0] = 1;
  for (int n = 1; n < M && n < N; ++n) {
    if (n > 1) {
      const int t = n - 1;
      if (6LL * t < N) detail::multiply_one_minus(u, 6 * t);
      if (2LL * t < N) detail::divide_one_minus(u, 2 * t);
      if (3LL * t < N) detail::divide_one_minus(u, 3 * t);
    }
    auto term = u;
    detail::divide_one_minus(term, n);
    detail::add_slice(acc, n, n, term, 1);
  }
  return acc;
}

/// sum_{n>=0} q^{n^2 + n*z_power} / (q;q)_n, the distinct-part k=2 series at
/// z = 1 (z_power 0) or z = q (z_power 1). Univariate (z_order 1).
inline TruncatedSeries rr_sum_series(int z_power, int q_order) {
  if (z_power != 0 && z_power != 1) throw std::invalid_argument("z_power must be 0 or 1");
  const int N = q_order;
  TruncatedSeries acc(1, N);
  detail::qcoeffs inv(N);
  inv[0] = 1;
  for (long long n = 0; n * n + n * z_power < N; ++n) {
    if (n > 0) detail::divide_one_minus(inv, static_cast<int>(n));
    detail::add_slice(acc, 0, n * n + n * z_power, inv, 1);
  }
  return acc;
}

/// sum_{n>=0} z^n q^{n^2} / (q;q)_n, bivariate.
inline TruncatedSeries rr_sum_bivariate(int z_order, int q_order) {
  const int M = z_order, N = q_order;
  TruncatedSeries acc(M, N);
  detail::qcoeffs inv(N);
  inv[0] = 1;
  for (long long n = 0; n < M && n * n < N; ++n) {
    if (n > 0) detail::divide_one_minus(inv, static_cast<int>(n));
    detail::add_slice(acc, static_cast<int>(n), n * n, inv, 1);
  }
  return acc;
}

/// 1/(q, q^4; q^5)_inf (z_power 0) or 1/(q^2, q^3; q^5)_inf (z_power 1).
inline TruncatedSeries rr_product_series(int z_power, int q_order) {
  if (z_power != 0 && z_power != 1) throw std::invalid_argument("z_power must be 0 or 1");
  const int a = z_power == 0 ? 1 : 2;
  auto s = expand_reciprocal({{1, 0, a}, 5, std::nullopt}, 1, q_order);
  return s * expand_reciprocal({{1, 0, 5 - a}, 5, std::nullopt}, 1, q_order);
}

/// Bivariate series with coefficients taken from a count table, clipped to the box.
inline TruncatedSeries series_from_counts(const CountTable& t, int z_order, int q_order) {
  TruncatedSeries s(z_order, q_order);
  for (int m = 0; m <= t.max_m() && m < z_order; ++m)
    for (int n = 0; n <= t.max_n() && n < q_order; ++n)
      if (const auto& c = t.at(m, n); c != 0) s.set(m, n, c);
  return s;
}

}  // namespace seqfree
