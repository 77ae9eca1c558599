#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hgfm {

/// An integer partition: a nonincreasing sequence of positive parts.
/// Trailing zeros are stripped on construction; the empty partition is the
/// weight-0 partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// i is 0-based; parts beyond the length read as 0.
  int part(int i) const {
    return i < static_cast<int>(parts_.size()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  bool operator==(const Partition&) const = default;

  std::string to_string() const;  // "3,1,1"; "-" for the empty partition

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of `weight` with at most `max_length` parts, in
/// reverse-lexicographic descending order: (k) first, then (k-1,1), ...
/// weight 0 yields just the empty partition.
std::vector<Partition> enumerate_partitions(int weight, int max_length);

/// Dominance order on partitions of equal weight: prefix sums of `mu` never
/// exceed those of `lam`. Requires mu.weight() == lam.weight().
bool dominated_by(const Partition& mu, const Partition& lam);

/// Strict "before" in the reverse-lexicographic order used by
/// enumerate_partitions (same-weight comparison).
bool revlex_before(const Partition& a, const Partition& b);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.parts()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace hgfm
