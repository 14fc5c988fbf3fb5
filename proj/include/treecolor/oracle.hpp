#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "treecolor/partition.hpp"
#include "treecolor/tree.hpp"

namespace treecolor {

/// Brute-force ground truth for small trees.
namespace oracle {

inline constexpr int kMaxOracleHeight = 4;

/// Streams every labeled coloring (colors 0..h, ancestor rule) of `shape`.
/// Nodes are assigned in heap order; each node excludes the colors on its
/// path. The same Coloring object is reused between calls. Returns the
/// number of colorings produced.
std::uint64_t enumerate_labeled_colorings(const TreeShape& shape,
                                          const std::function<void(const Coloring&)>& visit);

/// Number of node-set partitions induced by labeled colorings.
[[nodiscard]] std::uint64_t count_distinct_colorings(const TreeShape& shape);

/// Distinct colorings grouped by induced sorted partition.
[[nodiscard]] std::map<Partition, std::uint64_t> census_by_partition(const TreeShape& shape);

} // namespace oracle
} // namespace treecolor
