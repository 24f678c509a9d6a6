#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqfree {

/// Forbidden run length `k` and whether repeated parts are also forbidden.
///
/// A k-sequence is k consecutive integers that all occur as parts. With k = 1
/// every nonempty partition contains one, so only the empty partition survives.
struct SequenceConstraint {
  int k = 2;
  bool distinct = true;

  SequenceConstraint() = default;
  SequenceConstraint(int k_, bool distinct_) : k(k_), distinct(distinct_) {
    if (k < 1) throw std::invalid_argument("sequence length k must be >= 1, got " + std::to_string(k));
  }

  friend bool operator==(const SequenceConstraint&, const SequenceConstraint&) = default;
};

/// Integer partition stored as nonincreasing positive parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be nonincreasing");
    }
    for (int p : parts_) size_ += p;
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::int64_t size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  bool has_distinct_parts() const noexcept {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
  }

  /// Largest number of times any single value occurs.
  int max_multiplicity() const noexcept {
    int best = 0;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      best = std::max(best, static_cast<int>(j - i));
      i = j;
    }
    return best;
  }

  /// Smallest value `s` such that s, s+1, ..., s+k-1 all occur as parts, if any.
  std::optional<int> find_sequence(int k) const {
    if (k < 1) throw std::invalid_argument("sequence length k must be >= 1");
    int run = 0;
    std::optional<int> found;
    // Walk distinct values from largest to smallest; the last hit is the smallest start.
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0 && parts_[i] == parts_[i - 1]) continue;
      run = (i > 0 && parts_[i] + 1 == parts_[i - 1]) ? run + 1 : 1;
      if (run >= k) found = parts_[i];
    }
    return found;
  }

  bool satisfies(const SequenceConstraint& c) const {
    if (c.distinct && !has_distinct_parts()) return false;
    return !find_sequence(c.k).has_value();
  }

  /// "15+12+11", or "0" for the empty partition.
  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += '+';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::int64_t size_ = 0;
};

}  // namespace seqfree
