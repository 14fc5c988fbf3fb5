#include "treecolor/tree.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "treecolor/error.hpp"

namespace treecolor {

TreeShape::TreeShape(int height) : height_(height) {
  if (height < 0 || height > kMaxTreeHeight)
    throw DomainError("tree height " + std::to_string(height) + " outside [0, " +
                      std::to_string(kMaxTreeHeight) + "]");
}

std::uint64_t TreeShape::nodes_at_height(int i) const {
  if (i < 0 || i > height_)
    throw DomainError("nodes_at_height: level outside tree");
  return std::uint64_t{1} << i;
}

int node_height(NodeId node) {
  if (node == 0)
    throw DomainError("node index 0 is not a heap index");
  return std::bit_width(node) - 1;
}

std::vector<NodeId> ancestors(NodeId node, const TreeShape& shape) {
  if (!shape.contains(node))
    throw DomainError("node " + std::to_string(node) + " outside tree of height " +
                      std::to_string(shape.height()));
  std::vector<NodeId> chain;
  chain.reserve(static_cast<std::size_t>(node_height(node)));
  for (NodeId k = parent(node); k >= 1; k = parent(k))
    chain.push_back(k);
  return chain;
}

Coloring::Coloring(TreeShape shape, std::vector<Color> colors)
    : shape_(shape), colors_(std::move(colors)) {
  if (colors_.size() != shape_.node_count())
    throw DomainError("coloring has " + std::to_string(colors_.size()) + " entries, tree of height " +
                      std::to_string(shape_.height()) + " has " + std::to_string(shape_.node_count()) +
                      " nodes");
}

Coloring::Coloring(TreeShape shape) : shape_(shape), colors_(shape.node_count(), 0) {}

namespace {

struct Walker {
  std::span<const Color> colors;
  NodeId last;
  NodeId first_bad = 0;

  void visit(NodeId node, std::uint32_t path) {
    const std::uint32_t bit = std::uint32_t{1} << colors[node - 1];
    if (path & bit) {
      if (first_bad == 0 || node < first_bad)
        first_bad = node;
      // Descendants of a bad node have larger indices; nothing smaller below.
      return;
    }
    path |= bit;
    if (2 * node <= last) {
      visit(2 * node, path);
      visit(2 * node + 1, path);
    }
  }
};

} // namespace

std::vector<Part> color_class_sizes(const Coloring& coloring) {
  std::vector<Part> sizes(static_cast<std::size_t>(coloring.shape().color_count()), 0);
  for (const Color c : coloring.colors())
    ++sizes.at(c);
  return sizes;
}

ValidationResult validate_coloring(const Coloring& coloring) {
  const int h = coloring.shape().height();
  const auto colors = coloring.colors();
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] > h)
      throw DomainError("node " + std::to_string(i + 1) + " has color " + std::to_string(colors[i]) +
                        " outside [0, " + std::to_string(h) + "]");

  Walker walker{colors, coloring.shape().node_count()};
  walker.visit(1, 0);
  if (walker.first_bad != 0) {
    const NodeId bad = walker.first_bad;
    const Color c = coloring.color(bad);
    NodeId up = parent(bad);
    while (coloring.color(up) != c)
      up = parent(up);
    return ValidationResult(Violation{up, bad, c});
  }
  return ValidationResult(Partition(color_class_sizes(coloring)));
}

Coloring canonical_coloring(const TreeShape& shape) {
  Coloring coloring(shape);
  auto colors = coloring.colors();
  for (NodeId k = 1; k <= shape.node_count(); ++k)
    colors[k - 1] = static_cast<Color>(node_height(k));
  return coloring;
}

} // namespace treecolor

namespace treecolor {

Coloring relabel_by_first_appearance(const Coloring& coloring) {
  std::array<int, 256> map;
  map.fill(-1);
  int next = 0;
  Coloring out(coloring.shape());
  auto dst = out.colors();
  const auto src = coloring.colors();
  for (std::size_t i = 0; i < src.size(); ++i) {
    int& m = map[src[i]];
    if (m < 0)
      m = next++;
    dst[i] = static_cast<Color>(m);
  }
  return out;
}

} // namespace treecolor
