#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecolor/partition.hpp"
#include "treecolor/tree.hpp"

namespace treecolor::io {

inline constexpr std::string_view kDocumentFormat = "treecolor-coloring/1";
inline constexpr std::string_view kHeapOrdering = "heap";

/// Serialized coloring: flat heap-order color array plus its induced sorted
/// partition and provenance of the generator.
struct ColoringDocument {
  int height = 0;
  std::string ordering{kHeapOrdering};
  std::vector<Color> colors;
  std::vector<Part> partition;
  std::string algorithm;
  std::optional<std::vector<Part>> input_partition;

  friend bool operator==(const ColoringDocument&, const ColoringDocument&) = default;
};

/// Builds a document from a coloring that passes validate_coloring; throws
/// ContractError otherwise.
[[nodiscard]] ColoringDocument make_document(const Coloring& coloring, std::string algorithm,
                                             std::optional<Partition> input = std::nullopt);

[[nodiscard]] std::string write_document(const ColoringDocument& doc);

/// Structural parse only: syntax, format tag, field types, lengths and color
/// ranges. Throws ParseError naming the line or field.
[[nodiscard]] ColoringDocument parse_document(std::string_view text);

/// Empty when the colors obey the ancestor rule and the partition field
/// matches them; otherwise the reason.
[[nodiscard]] std::optional<std::string> check_document(const ColoringDocument& doc);

/// parse_document followed by check_document; a failed check is a ParseError.
[[nodiscard]] ColoringDocument read_document(std::string_view text);

[[nodiscard]] Coloring to_coloring(const ColoringDocument& doc);

inline constexpr int kDefaultDotMaxHeight = 6;

/// Graphviz description: one vertex per node labeled by color letter, filled
/// from a 12-color palette, parent-child edges. Throws CapacityError above
/// `max_height`.
[[nodiscard]] std::string export_dot(const Coloring& coloring, int max_height = kDefaultDotMaxHeight);

/// a, b, c, ... for colors 0..25, "c26" style beyond.
[[nodiscard]] std::string color_letter(Color c);

/// Repetition notation: "1 36^5 37^2".
[[nodiscard]] std::string format_repetition(const Partition& p);
/// Inverse of format_repetition; throws ParseError.
[[nodiscard]] Partition parse_repetition(std::string_view text);

/// "(1, 62, 32)"
[[nodiscard]] std::string format_sequence(std::span<const Part> seq);

} // namespace treecolor::io
