#include "treecolor/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "treecolor/error.hpp"

namespace treecolor::oracle {

namespace {

void check_guard(const TreeShape& shape) {
  if (shape.height() > kMaxOracleHeight)
    throw CapacityError("oracle: height " + std::to_string(shape.height()) + " exceeds limit " +
                        std::to_string(kMaxOracleHeight));
}

// Heap-order assignment with one path mask per node. With `canonical_only`,
// a color may be used for the first time only if it is the next unused label,
// which keeps exactly one labeling per node-set partition.
class Generator {
public:
  Generator(const TreeShape& shape, bool canonical_only, const std::function<void(const Coloring&)>& visit)
      : shape_(shape), canonical_only_(canonical_only), visit_(visit), work_(shape),
        path_(shape.node_count() + 1, 0) {}

  std::uint64_t run() {
    descend(1, 0);
    return produced_;
  }

private:
  void descend(NodeId node, int used) {
    if (node > shape_.node_count()) {
      ++produced_;
      if (visit_)
        visit_(work_);
      return;
    }
    const int colors = shape_.color_count();
    const int limit = canonical_only_ ? std::min(colors, used + 1) : colors;
    const std::uint32_t above = path_[parent(node)];
    for (int c = 0; c < limit; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      if (above & bit)
        continue;
      work_.set(node, static_cast<Color>(c));
      path_[node] = above | bit;
      descend(node + 1, std::max(used, c + 1));
    }
  }

  TreeShape shape_;
  bool canonical_only_;
  const std::function<void(const Coloring&)>& visit_;
  Coloring work_;
  std::vector<std::uint32_t> path_;
  std::uint64_t produced_ = 0;
};

} // namespace

std::uint64_t enumerate_labeled_colorings(const TreeShape& shape,
                                          const std::function<void(const Coloring&)>& visit) {
  check_guard(shape);
  return Generator(shape, false, visit).run();
}

std::uint64_t count_distinct_colorings(const TreeShape& shape) {
  check_guard(shape);
  const std::function<void(const Coloring&)> none;
  return Generator(shape, true, none).run();
}

std::map<Partition, std::uint64_t> census_by_partition(const TreeShape& shape) {
  check_guard(shape);
  std::map<Partition, std::uint64_t> census;
  const std::function<void(const Coloring&)> tally = [&](const Coloring& c) {
    ++census[Partition(color_class_sizes(c))];
  };
  Generator(shape, true, tally).run();
  return census;
}

} // namespace treecolor::oracle
