#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace treecolor {

using Part = std::uint64_t;

/// Sorted sequence of color-class sizes (a_0 <= a_1 <= ... <= a_h).
///
/// Label order carries no meaning for a partition, so construction from any
/// sequence sorts it; two partitions compare equal iff their sorted contents
/// agree. The height is the number of parts minus one.
class Partition {
public:
  /// Sorts `parts`. Throws DomainError on an empty sequence or a zero part.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts);

  [[nodiscard]] std::span<const Part> parts() const noexcept { return parts_; }
  [[nodiscard]] std::size_t size() const noexcept { return parts_.size(); }
  [[nodiscard]] int height() const noexcept { return static_cast<int>(parts_.size()) - 1; }
  [[nodiscard]] Part operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] Part max() const noexcept { return parts_.back(); }
  [[nodiscard]] Part sum() const noexcept;

  /// "(1, 2, 4, 8)"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<Part> parts_;
};

/// Number of nodes 2^(h+1) - 1 of a perfect binary tree of height h.
[[nodiscard]] constexpr Part node_count_for_height(int h) noexcept {
  return (Part{1} << (h + 1)) - 1;
}

enum class ColorabilityFailure {
  none,
  sum_mismatch,    // total differs from 2^(h+1) - 1
  unit_part_count, // not exactly one part equal to 1
  prefix_bound,    // the k smallest parts sum below 2^k - 1
};

struct ColorabilityVerdict {
  ColorabilityFailure failure = ColorabilityFailure::none;
  /// Witness for prefix_bound (1-based count of smallest parts); for
  /// unit_part_count, the number of unit parts found.
  int k = 0;
  Part actual = 0;
  Part required = 0;

  [[nodiscard]] bool colorable() const noexcept { return failure == ColorabilityFailure::none; }
  explicit operator bool() const noexcept { return colorable(); }
  /// One-line human/machine readable reason, "colorable" on success.
  [[nodiscard]] std::string describe() const;
};

/// Sum rule, unique unit part, and for every k the k smallest parts summing
/// to at least 2^k - 1. The k smallest parts minimize every k-subset sum, so
/// the prefix check covers all color subsets.
[[nodiscard]] ColorabilityVerdict is_colorable(const Partition& p);

/// Same verdict computed from the complementary form: every k largest parts
/// sum to at most 2^(h+1) - 2^(h+1-k).
[[nodiscard]] bool is_colorable_upper(const Partition& p);

/// (1, 2, 4, ..., 2^h)
[[nodiscard]] Partition canonical_partition(int h);

struct BalancedSpec {
  Part m = 0; // N_h - 1
  Part q = 0;
  Part r = 0;
};

/// Euclidean division of the non-root nodes over the h non-root colors.
/// Requires h >= 1.
[[nodiscard]] BalancedSpec balanced_spec(int h);

/// Colorable partition minimizing the largest class: (1, q^(h-r), (q+1)^r).
[[nodiscard]] Partition balanced_partition(int h);

inline constexpr int kMaxEnumerateVisitHeight = 8;
inline constexpr int kMaxEnumerateListHeight = 6;

/// Calls `visit` for every colorable partition of height h in lexicographic
/// order. Throws CapacityError above kMaxEnumerateVisitHeight.
void for_each_colorable_partition(int h, const std::function<void(const Partition&)>& visit);

/// Number of partitions of n into exactly k positive parts.
[[nodiscard]] std::uint64_t count_partitions(Part n, int k);

struct PartitionCensus {
  std::vector<Partition> colorable;
  /// All partitions of N_h into h+1 positive parts.
  std::uint64_t total = 0;
};

/// Materialized census. Throws CapacityError above kMaxEnumerateListHeight.
[[nodiscard]] PartitionCensus enumerate_colorable_partitions(int h);

/// Every partition of n into k positive parts, non-decreasing, lexicographic.
/// Unpruned; meant for small n.
void for_each_partition(Part n, int k, const std::function<void(const Partition&)>& visit);

} // namespace treecolor
