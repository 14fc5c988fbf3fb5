#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "treecolor/partition.hpp"

namespace treecolor {

/// Heap index: root = 1, children of k are 2k and 2k + 1.
using NodeId = std::uint64_t;
using Color = std::uint8_t;

inline constexpr int kMaxTreeHeight = 30;

/// A perfect binary tree, fully described by its height.
class TreeShape {
public:
  explicit TreeShape(int height);

  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] std::uint64_t node_count() const noexcept { return node_count_for_height(height_); }
  [[nodiscard]] std::uint64_t nodes_at_height(int i) const;
  [[nodiscard]] bool contains(NodeId node) const noexcept {
    return node >= 1 && node <= node_count();
  }
  [[nodiscard]] int color_count() const noexcept { return height_ + 1; }

  friend auto operator<=>(const TreeShape&, const TreeShape&) = default;

private:
  int height_;
};

/// floor(log2(node)); node must be >= 1.
[[nodiscard]] int node_height(NodeId node);
[[nodiscard]] inline NodeId parent(NodeId node) noexcept { return node / 2; }

/// Parent chain up to the root, nearest first. Throws DomainError for a node
/// outside `shape`.
[[nodiscard]] std::vector<NodeId> ancestors(NodeId node, const TreeShape& shape);

/// Color per node in heap order; entry k-1 holds the color of node k.
class Coloring {
public:
  /// Throws DomainError if the length is not N_h. Color values are not
  /// range-checked here; validate_coloring reports them.
  Coloring(TreeShape shape, std::vector<Color> colors);
  /// All nodes colored 0.
  explicit Coloring(TreeShape shape);

  [[nodiscard]] const TreeShape& shape() const noexcept { return shape_; }
  [[nodiscard]] std::span<const Color> colors() const noexcept { return colors_; }
  [[nodiscard]] std::span<Color> colors() noexcept { return colors_; }
  [[nodiscard]] Color color(NodeId node) const { return colors_[node - 1]; }
  void set(NodeId node, Color c) { colors_[node - 1] = c; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;

private:
  TreeShape shape_;
  std::vector<Color> colors_;
};

struct Violation {
  NodeId ancestor = 0;
  NodeId descendant = 0;
  Color color = 0;
};

/// Either the induced sorted partition or the first rule violation.
class ValidationResult {
public:
  explicit ValidationResult(Partition p) : value_(std::move(p)) {}
  explicit ValidationResult(Violation v) : value_(v) {}

  [[nodiscard]] bool ok() const noexcept { return std::holds_alternative<Partition>(value_); }
  explicit operator bool() const noexcept { return ok(); }
  [[nodiscard]] const Partition& partition() const { return std::get<Partition>(value_); }
  [[nodiscard]] const Violation& violation() const { return std::get<Violation>(value_); }

private:
  std::variant<Partition, Violation> value_;
};

/// Checks that every root-to-leaf path carries pairwise distinct colors.
///
/// A depth-first walk keeps one seen-colors mask per level, so memory is
/// O(h) beyond the coloring itself. On failure the reported pair is the one
/// with the smallest descendant index, paired with its nearest same-colored
/// ancestor. Throws DomainError if any color lies outside [0, h].
[[nodiscard]] ValidationResult validate_coloring(const Coloring& coloring);

/// Every node at height i gets color i.
[[nodiscard]] Coloring canonical_coloring(const TreeShape& shape);

/// Class sizes per color label (index = label), no sorting. Requires colors
/// within range.
[[nodiscard]] std::vector<Part> color_class_sizes(const Coloring& coloring);

} // namespace treecolor

namespace treecolor {

/// Renumbers colors in order of first appearance in heap order. Two colorings
/// induce the same node-set partition iff their relabelings are equal.
[[nodiscard]] Coloring relabel_by_first_appearance(const Coloring& coloring);

} // namespace treecolor
