#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace seqfree {

/// Largest n the brute-force enumerator accepts unless the caller raises it.
inline constexpr int default_brute_force_bound = 60;

namespace detail {

// Depth-first generation, largest part first. `run` is the number of
// consecutive distinct values ending at the most recent part.
inline void enumerate_rec(const SequenceConstraint& c, int remaining, int max_part, int run,
                          std::vector<int>& parts, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(parts);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    int next_run = 1;
    if (!parts.empty()) {
      if (p == parts.back())
        next_run = run;
      else if (p + 1 == parts.back())
        next_run = run + 1;
    }
    if (next_run >= c.k) continue;
    parts.push_back(p);
    enumerate_rec(c, remaining - p, c.distinct ? p - 1 : p, next_run, parts, out);
    parts.pop_back();
  }
}

}  // namespace detail

/// All partitions of `n` satisfying `c`, in descending lexicographic order of
/// their part sequences (so `6` precedes `5+1`).
///
/// This is the brute-force reference for the counting routines; it refuses
/// n > bound rather than running for hours.
inline std::vector<Partition> enumerate(const SequenceConstraint& c, int n,
                                        int bound = default_brute_force_bound) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > bound)
    throw budget_exceeded("brute-force enumeration is limited to n <= " + std::to_string(bound) +
                          " (requested n = " + std::to_string(n) + ")");
  std::vector<Partition> out;
  std::vector<int> parts;
  detail::enumerate_rec(c, n, n, 0, parts, out);
  return out;
}

}  // namespace seqfree
