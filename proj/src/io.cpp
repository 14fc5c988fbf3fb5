#include "treecolor/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "treecolor/error.hpp"

namespace treecolor::io {

using nlohmann::json;

ColoringDocument make_document(const Coloring& coloring, std::string algorithm, std::optional<Partition> input) {
  const auto result = validate_coloring(coloring);
  if (!result)
    throw ContractError("make_document: coloring violates the ancestor rule at node " +
                        std::to_string(result.violation().descendant));
  ColoringDocument doc;
  doc.height = coloring.shape().height();
  doc.colors.assign(coloring.colors().begin(), coloring.colors().end());
  doc.partition.assign(result.partition().parts().begin(), result.partition().parts().end());
  doc.algorithm = std::move(algorithm);
  if (input)
    doc.input_partition = std::vector<Part>(input->parts().begin(), input->parts().end());
  return doc;
}

std::string write_document(const ColoringDocument& doc) {
  json j;
  j["format"] = kDocumentFormat;
  j["height"] = doc.height;
  j["ordering"] = doc.ordering;
  j["partition"] = doc.partition;
  j["generator"] = {{"algorithm", doc.algorithm},
                    {"input_partition", doc.input_partition ? json(*doc.input_partition) : json(nullptr)}};
  j["colors"] = doc.colors;
  return j.dump(1) + "\n";
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    field_error(key, "missing");
  return *it;
}

std::vector<Part> read_parts(const json& j, const std::string& field) {
  if (!j.is_array())
    field_error(field, "expected an array of positive integers");
  std::vector<Part> parts;
  parts.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned() || j[i].get<Part>() == 0)
      field_error(field + "[" + std::to_string(i) + "]", "expected a positive integer");
    parts.push_back(j[i].get<Part>());
  }
  return parts;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

} // namespace

ColoringDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                     ": malformed JSON (" + e.what() + ")");
  }
  if (!j.is_object())
    throw ParseError("line 1: document must be a JSON object");

  const json& format = require(j, "format");
  if (!format.is_string() || format.get<std::string>() != kDocumentFormat)
    field_error("format", "expected \"" + std::string(kDocumentFormat) + "\"");

  ColoringDocument doc;
  const json& height = require(j, "height");
  if (!height.is_number_integer() || height.get<long long>() < 0 || height.get<long long>() > kMaxTreeHeight)
    field_error("height", "expected an integer in [0, " + std::to_string(kMaxTreeHeight) + "]");
  doc.height = height.get<int>();

  const json& ordering = require(j, "ordering");
  if (!ordering.is_string() || ordering.get<std::string>() != kHeapOrdering)
    field_error("ordering", "expected \"heap\"");

  const json& colors = require(j, "colors");
  if (!colors.is_array())
    field_error("colors", "expected an array");
  const std::uint64_t nodes = node_count_for_height(doc.height);
  if (colors.size() != nodes)
    field_error("colors", "has " + std::to_string(colors.size()) + " entries, height " +
                              std::to_string(doc.height) + " needs " + std::to_string(nodes));
  doc.colors.reserve(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const json& c = colors[i];
    if (!c.is_number_integer() || c.get<long long>() < 0 || c.get<long long>() > doc.height)
      field_error("colors[" + std::to_string(i) + "]",
                  "color " + c.dump() + " outside [0, " + std::to_string(doc.height) + "]");
    doc.colors.push_back(static_cast<Color>(c.get<int>()));
  }

  doc.partition = read_parts(require(j, "partition"), "partition");
  if (doc.partition.size() != static_cast<std::size_t>(doc.height) + 1)
    field_error("partition", "expected " + std::to_string(doc.height + 1) + " parts");

  const json& generator = require(j, "generator");
  if (!generator.is_object())
    field_error("generator", "expected an object");
  const json& algorithm = require(generator, "algorithm");
  if (!algorithm.is_string())
    field_error("generator.algorithm", "expected a string");
  doc.algorithm = algorithm.get<std::string>();
  if (const auto it = generator.find("input_partition"); it != generator.end() && !it->is_null())
    doc.input_partition = read_parts(*it, "generator.input_partition");
  return doc;
}

std::optional<std::string> check_document(const ColoringDocument& doc) {
  const Coloring coloring = to_coloring(doc);
  const auto result = validate_coloring(coloring);
  if (!result) {
    const Violation& v = result.violation();
    return "ancestor rule violated: node " + std::to_string(v.ancestor) + " and descendant " +
           std::to_string(v.descendant) + " share color " + std::to_string(v.color);
  }
  if (!std::equal(doc.partition.begin(), doc.partition.end(), result.partition().parts().begin(),
                  result.partition().parts().end()))
    return "partition field " + format_sequence(doc.partition) + " does not match colors " +
           result.partition().to_string();
  return std::nullopt;
}

ColoringDocument read_document(std::string_view text) {
  ColoringDocument doc = parse_document(text);
  if (auto reason = check_document(doc))
    throw ParseError("field 'colors': " + *reason);
  return doc;
}

Coloring to_coloring(const ColoringDocument& doc) { return Coloring(TreeShape(doc.height), doc.colors); }

std::string color_letter(Color c) {
  if (c < 26)
    return std::string(1, static_cast<char>('a' + c));
  return "c" + std::to_string(c);
}

std::string export_dot(const Coloring& coloring, int max_height) {
  const TreeShape& shape = coloring.shape();
  if (shape.height() > max_height)
    throw CapacityError("export_dot: height " + std::to_string(shape.height()) + " exceeds limit " +
                        std::to_string(max_height));
  static constexpr std::array<const char*, 12> palette = {
      "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
      "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928"};
  std::ostringstream os;
  os << "graph coloring {\n  node [shape=circle, style=filled];\n";
  for (NodeId k = 1; k <= shape.node_count(); ++k) {
    const Color c = coloring.color(k);
    os << "  n" << k << " [label=\"" << color_letter(c) << "\", fillcolor=\"" << palette[c % palette.size()]
       << "\"];\n";
  }
  for (NodeId k = 2; k <= shape.node_count(); ++k)
    os << "  n" << parent(k) << " -- n" << k << ";\n";
  os << "}\n";
  return os.str();
}

std::string format_repetition(const Partition& p) {
  std::ostringstream os;
  const auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i])
      ++j;
    if (i)
      os << ' ';
    os << parts[i];
    if (j - i > 1)
      os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

Partition parse_repetition(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<Part> parts;
  std::string token;
  while (is >> token) {
    const auto caret = token.find('^');
    try {
      std::size_t used = 0;
      const Part value = std::stoull(token.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? token.size() : caret))
        throw std::invalid_argument(token);
      std::size_t repeat = 1;
      if (caret != std::string::npos) {
        const std::string tail = token.substr(caret + 1);
        repeat = std::stoull(tail, &used);
        if (used != tail.size() || repeat == 0)
          throw std::invalid_argument(token);
      }
      parts.insert(parts.end(), repeat, value);
    } catch (const std::logic_error&) {
      throw ParseError("malformed repetition token '" + token + "'");
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string format_sequence(std::span<const Part> seq) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i)
      os << ", ";
    os << seq[i];
  }
  os << ')';
  return os.str();
}

} // namespace treecolor::io
