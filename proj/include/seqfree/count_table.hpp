#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "numeric_types.hpp"
#include "partition.hpp"

namespace seqfree {

enum class Provenance { brute_force, dp, series };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::brute_force: return "brute_force";
    case Provenance::dp: return "dp";
    case Provenance::series: return "series";
  }
  return "unknown";
}

/// Counts of constrained partitions by (number of parts m, size n), for
/// 0 <= m <= max_m and 0 <= n <= max_n. Holds Q_k(m,n) when the constraint is
/// distinct and p_k(m,n) otherwise.
class CountTable {
 public:
  CountTable(SequenceConstraint c, int max_m, int max_n, Provenance prov)
      : constraint_(c), max_m_(max_m), max_n_(max_n), provenance_(prov) {
    if (max_m < 0 || max_n < 0) throw std::invalid_argument("table bounds must be nonnegative");
    cells_.resize(static_cast<std::size_t>(max_m + 1) * (max_n + 1));
  }

  const SequenceConstraint& constraint() const noexcept { return constraint_; }
  int max_m() const noexcept { return max_m_; }
  int max_n() const noexcept { return max_n_; }
  Provenance provenance() const noexcept { return provenance_; }

  const big_int& at(int m, int n) const { return cells_.at(index(m, n)); }
  big_int& at(int m, int n) { return cells_.at(index(m, n)); }

  /// Sum over m <= max_m; equals Q_k(n) / p_k(n) when max_m >= n.
  big_int total(int n) const {
    big_int s = 0;
    for (int m = 0; m <= max_m_; ++m) s += at(m, n);
    return s;
  }

  /// CSV with header `k,distinct,m,n,count`, rows ordered by (n, m).
  std::string to_csv(bool include_zeros = false) const {
    std::ostringstream os;
    os << "k,distinct,m,n,count\n";
    for (int n = 0; n <= max_n_; ++n)
      for (int m = 0; m <= std::min(max_m_, n); ++m) {
        const auto& v = at(m, n);
        if (v == 0 && !include_zeros) continue;
        os << constraint_.k << ',' << (constraint_.distinct ? "true" : "false") << ',' << m << ','
           << n << ',' << v.str() << '\n';
      }
    return os.str();
  }

  /// Entry-wise equality of counts; provenance is ignored.
  friend bool same_counts(const CountTable& a, const CountTable& b) {
    return a.constraint_ == b.constraint_ && a.max_m_ == b.max_m_ && a.max_n_ == b.max_n_ &&
           a.cells_ == b.cells_;
  }

 private:
  std::size_t index(int m, int n) const {
    if (m < 0 || m > max_m_ || n < 0 || n > max_n_)
      throw std::out_of_range("count table index (" + std::to_string(m) + "," + std::to_string(n) +
                              ") outside bounds");
    return static_cast<std::size_t>(m) * (max_n_ + 1) + n;
  }

  SequenceConstraint constraint_;
  int max_m_;
  int max_n_;
  Provenance provenance_;
  std::vector<big_int> cells_;
};

/// Largest m with a distinct-part partition of size <= n into m parts.
inline int max_distinct_length(int n) {
  int m = 0;
  while ((m + 1) * (m + 2) / 2 <= n) ++m;
  return m;
}

namespace detail {

// Run-length automaton over part values 1, 2, 3, ... State r is the length of
// the run of consecutive included values ending at the current value; it must
// stay <= k-1. Cells are indexed [m][n] (rows = parts used, cols = size).
//
// Memory is k * (rows+1) * (max_n+1) integers; time is max_n times that.
template <class Int>
class RunLengthDp {
 public:
  RunLengthDp(SequenceConstraint c, int rows, int max_n)
      : c_(c), rows_(rows), cols_(max_n + 1), layers_(c.k, std::vector<Int>(size(), Int(0))) {
    layers_[0][0] = 1;
  }

  void run() {
    for (int v = 1; v < cols_; ++v) step(v);
  }

  /// Sum over run states of cell (m, n).
  Int cell(int m, int n) const {
    Int s = 0;
    for (const auto& layer : layers_) s += layer[idx(m, n)];
    return s;
  }

 private:
  std::size_t size() const { return static_cast<std::size_t>(rows_ + 1) * cols_; }
  std::size_t idx(int m, int n) const { return static_cast<std::size_t>(m) * cols_ + n; }

  void step(int v) {
    std::vector<Int> none = layers_[0];
    for (int r = 1; r < c_.k; ++r)
      for (std::size_t i = 0; i < none.size(); ++i)
        if (layers_[r][i] != 0) none[i] += layers_[r][i];
    // Descending r so layers_[r] is still the previous value's layer when read.
    for (int r = c_.k - 2; r >= 0; --r) layers_[r + 1] = include(layers_[r], v);
    layers_[0] = std::move(none);
  }

  // Include value v in the partition: once if distinct, any positive number of
  // times otherwise. When rows_ == 0 the m coordinate is not tracked.
  std::vector<Int> include(const std::vector<Int>& src, int v) const {
    std::vector<Int> dst(size(), Int(0));
    const int dm = rows_ == 0 ? 0 : 1;
    for (int m = 0; m + dm <= rows_; ++m)
      for (int n = 0; n + v < cols_; ++n) {
        const auto& s = src[idx(m, n)];
        if (s != 0) dst[idx(m + dm, n + v)] += s;
      }
    if (!c_.distinct) {
      // dst[m][n] += dst[m-1][n-v] accumulates multiplicities 2, 3, ...
      for (int m = dm; m <= rows_; ++m)
        for (int n = v; n < cols_; ++n) {
          const auto& s = dst[idx(m - dm, n - v)];
          if (s != 0) dst[idx(m, n)] += Int(s);
        }
    }
    return dst;
  }

  SequenceConstraint c_;
  int rows_;
  int cols_;
  std::vector<std::vector<Int>> layers_;
};

}  // namespace detail

/// Q_k(m,n) or p_k(m,n) for all m <= max_m, n <= max_n by the run-length DP.
inline CountTable count_dp(const SequenceConstraint& c, int max_n, int max_m) {
  CountTable table(c, max_m, max_n, Provenance::dp);
  const int feasible = c.distinct ? max_distinct_length(max_n) : max_n;
  const int rows = std::min(max_m, feasible);
  if (rows == 0) {
    table.at(0, 0) = 1;
    return table;
  }
  detail::RunLengthDp<big_int> dp(c, rows, max_n);
  dp.run();
  for (int m = 0; m <= rows; ++m)
    for (int n = 0; n <= max_n; ++n) table.at(m, n) = dp.cell(m, n);
  return table;
}

/// Q_k(n) or p_k(n) for n = 0..max_n, without tracking the number of parts.
template <class Int = big_int>
std::vector<Int> count_totals(const SequenceConstraint& c, int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  detail::RunLengthDp<Int> dp(c, 0, max_n);
  dp.run();
  std::vector<Int> out(max_n + 1);
  for (int n = 0; n <= max_n; ++n) out[n] = dp.cell(0, n);
  return out;
}

/// Classical partition numbers p(n) (or q(n) when distinct) for n = 0..max_n,
/// by the coin-change recurrence over part sizes.
inline std::vector<big_int> classical_partition_counts(int max_n, bool distinct) {
  std::vector<big_int> a(max_n + 1);
  a[0] = 1;
  for (int v = 1; v <= max_n; ++v) {
    if (distinct)
      for (int n = max_n; n >= v; --n) a[n] += a[n - v];
    else
      for (int n = v; n <= max_n; ++n) a[n] += a[n - v];
  }
  return a;
}

/// Same table built by tallying `enumerate`; limited to the brute-force bound.
inline CountTable count_brute_force(const SequenceConstraint& c, int max_n, int max_m,
                                    int bound = default_brute_force_bound) {
  CountTable table(c, max_m, max_n, Provenance::brute_force);
  for (int n = 0; n <= max_n; ++n)
    for (const auto& p : enumerate(c, n, bound))
      if (p.length() <= max_m) table.at(p.length(), n) += 1;
  return table;
}

}  // namespace seqfree
