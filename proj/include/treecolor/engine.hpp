#pragma once

#include <cstddef>
#include <vector>

#include "treecolor/partition.hpp"
#include "treecolor/tree.hpp"

namespace treecolor {

/// Class sizes handed to the two subtrees below the root. Entry i-1 of `b`
/// and `c` belongs to parent label i (label 0, the root color, is excluded).
/// The sequences are generally not sorted.
struct SplitResult {
  std::vector<Part> b;
  std::vector<Part> c;

  friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

/// Running state of the split after one more label has been distributed.
struct SplitState {
  int label = 0;
  int token_b = 1;
  int token_c = 0;
  Part beta = 0;  // b_1 + ... + b_label
  Part gamma = 0; // c_1 + ... + c_label
};

/// Stable ascending sort of a sequence of counts, as a map on labels.
/// forward()[sorted position] = original label, inverse()[original label] =
/// sorted position. Ties keep ascending original label.
class LabelPermutation {
public:
  [[nodiscard]] static LabelPermutation sorting(std::span<const Part> counts);

  [[nodiscard]] std::span<const std::size_t> forward() const noexcept { return forward_; }
  [[nodiscard]] std::span<const std::size_t> inverse() const noexcept { return inverse_; }
  [[nodiscard]] std::size_t size() const noexcept { return forward_.size(); }

private:
  std::vector<std::size_t> forward_;
  std::vector<std::size_t> inverse_;
};

/// Distributes the non-root classes of a colorable sorted partition between
/// the two subtrees so both halves are colorable partitions of height h-1.
///
/// a_1 = 2: both subtree roots take color 1; the remaining classes are halved
/// and odd units alternate between the sides, starting with B.
/// a_1 >= 3: B's root takes color 1 and C's root color 2, color 3 is split so
/// that (b_1+b_2+b_3) - (c_1+c_2+c_3) = (a_1+a_2+a_3) mod 2, and the halving
/// loop continues from color 4 with the token set accordingly.
///
/// Throws DomainError for h = 0 and ContractError for a non-colorable input.
/// When `steps` is non-null it receives the state after each label.
[[nodiscard]] SplitResult split_partition(const Partition& a, std::vector<SplitState>* steps = nullptr);

inline constexpr int kMaxColorTreeHeight = 25;

/// Full coloring of the tree whose induced sorted partition equals `a`.
/// Color labels are the positions in the sorted partition.
[[nodiscard]] Coloring color_tree(const Partition& a, const TreeShape& shape);

struct TraceEntry {
  int level = 0; // height of the subtree being split
  Partition parent;
  std::vector<Part> b;
  std::vector<Part> c;
};

/// Sorted partitions met at each recursion level of color_tree, with the raw
/// split of each. Duplicates within a level are collapsed, keeping the order
/// of first appearance in node order.
[[nodiscard]] std::vector<TraceEntry> trace_color_tree(const Partition& a, const TreeShape& shape);

inline constexpr int kMaxEnumerateSplitsHeight = 6;
inline constexpr int kMaxEnumerateColoringsHeight = 4;

/// Unordered pair of sorted child partitions, stored with first <= second.
struct SplitPair {
  Partition first;
  Partition second;

  friend bool operator==(const SplitPair&, const SplitPair&) = default;
  friend auto operator<=>(const SplitPair&, const SplitPair&) = default;
};

/// Every unordered pair {sorted B, sorted C} with b_i + c_i = a_i for i >= 1
/// and both children colorable, found by exhaustive search (not by varying
/// the choices of split_partition). Sorted ascending.
[[nodiscard]] std::vector<SplitPair> enumerate_splits(const Partition& a);

/// Every coloring of `shape` inducing `a`, one representative per node-set
/// partition (labels renumbered by first appearance in heap order). Sorted.
[[nodiscard]] std::vector<Coloring> enumerate_colorings(const Partition& a, const TreeShape& shape);

} // namespace treecolor
