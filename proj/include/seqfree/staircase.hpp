#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace seqfree {

// Staircase bijection between distinct-part partitions with no k-sequence and
// partitions whose parts each occur at most k-1 times. Length is preserved and
// the size drops by m(m-1)/2 where m is the length.

/// lambda'_j = lambda_j - (m - j) for j = 1..m.
inline Partition staircase_forward(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto& p = lambda.parts();
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1])
      throw constraint_violation("part " + std::to_string(p[i]) + " is repeated in " +
                                 lambda.to_string());
  if (auto start = lambda.find_sequence(k))
    throw constraint_violation("parts " + std::to_string(*start) + ".." +
                               std::to_string(*start + k - 1) + " form a " + std::to_string(k) +
                               "-sequence in " + lambda.to_string());
  const int m = lambda.length();
  std::vector<int> out(p.size());
  for (int j = 0; j < m; ++j) out[j] = p[j] - (m - 1 - j);
  return Partition(std::move(out));
}

/// Adds the staircase back; the input may repeat each value at most k-1 times.
inline Partition staircase_inverse(const Partition& lambda_prime, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto& p = lambda_prime.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (static_cast<int>(j - i) >= k)
      throw constraint_violation("part " + std::to_string(p[i]) + " occurs " +
                                 std::to_string(j - i) + " times in " + lambda_prime.to_string() +
                                 " (at most " + std::to_string(k - 1) + " allowed)");
    i = j;
  }
  const int m = lambda_prime.length();
  std::vector<int> out(p.size());
  for (int j = 0; j < m; ++j) out[j] = p[j] + (m - 1 - j);
  return Partition(std::move(out));
}

}  // namespace seqfree
