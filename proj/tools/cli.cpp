#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "treecolor/counting.hpp"
#include "treecolor/engine.hpp"
#include "treecolor/error.hpp"
#include "treecolor/io.hpp"
#include "treecolor/partition.hpp"
#include "treecolor/tree.hpp"

namespace treecolor::cli {

namespace {

struct Failure {
  int code;
  std::string kind;
  std::string message;
};

Partition partition_for_height(const std::vector<Part>& parts, int h) {
  if (parts.size() != static_cast<std::size_t>(h) + 1)
    throw Failure{kUsageError, "usage",
                  "expected " + std::to_string(h + 1) + " parts for height " + std::to_string(h) + ", got " +
                      std::to_string(parts.size())};
  return Partition(parts);
}

int cmd_check(const std::vector<Part>& parts, int h, std::ostream& out) {
  const Partition p = partition_for_height(parts, h);
  const auto verdict = is_colorable(p);
  if (verdict) {
    out << "colorable " << p.to_string() << "\n";
    return kSuccess;
  }
  out << "not colorable " << p.to_string() << ": " << verdict.describe() << "\n";
  return kVerdictFalse;
}

int cmd_balance(int h, bool expand, std::ostream& out) {
  const Partition p = balanced_partition(h);
  if (expand)
    out << io::format_sequence(p.parts()) << "\n";
  else
    out << io::format_repetition(p) << "\n";
  return kSuccess;
}

struct ColorOptions {
  int height = 0;
  std::vector<Part> parts;
  bool balanced = false;
  bool canonical = false;
  std::string format = "json";
  bool trace = false;
  std::string output;
  int dot_max_height = io::kDefaultDotMaxHeight;
};

void print_trace(const std::vector<TraceEntry>& trace, std::ostream& out) {
  int current = -1;
  int index = 0;
  std::size_t per_level = 0;
  for (const auto& e : trace)
    if (e.level == trace.front().level)
      ++per_level;
  for (const auto& e : trace) {
    if (e.level != current) {
      current = e.level;
      index = 0;
      per_level = static_cast<std::size_t>(
          std::count_if(trace.begin(), trace.end(), [&](const TraceEntry& t) { return t.level == current; }));
    }
    ++index;
    const std::string tag = per_level > 1 ? "#" + std::to_string(index) : "";
    out << "A" << e.level << tag << " = " << io::format_sequence(e.parent.parts()) << "\n";
    out << "B" << e.level - 1 << tag << " = " << io::format_sequence(e.b) << "\n";
    out << "C" << e.level - 1 << tag << " = " << io::format_sequence(e.c) << "\n";
  }
}

int cmd_color(const ColorOptions& opt, std::ostream& out) {
  const int selected = static_cast<int>(!opt.parts.empty()) + opt.balanced + opt.canonical;
  if (selected != 1)
    throw Failure{kUsageError, "usage", "choose exactly one of --partition, --balanced, --canonical"};
  if (opt.height > kMaxColorTreeHeight)
    throw CapacityError("color: height " + std::to_string(opt.height) + " exceeds limit " +
                        std::to_string(kMaxColorTreeHeight));
  const TreeShape shape(opt.height);
  Partition input = opt.balanced    ? balanced_partition(opt.height)
                    : opt.canonical ? canonical_partition(opt.height)
                                    : partition_for_height(opt.parts, opt.height);
  const char* algorithm = "recursive-split";
  if (opt.trace)
    print_trace(trace_color_tree(input, shape), out);
  const Coloring coloring = color_tree(input, shape);

  std::string rendered;
  if (opt.format == "json") {
    rendered = io::write_document(io::make_document(coloring, algorithm, input));
  } else if (opt.format == "dot") {
    rendered = io::export_dot(coloring, opt.dot_max_height);
  } else {
    const auto result = validate_coloring(coloring);
    std::ostringstream os;
    os << "height " << opt.height << "\nnodes " << shape.node_count() << "\ninput "
       << io::format_repetition(input) << "\npartition " << io::format_repetition(result.partition())
       << "\nmax class " << result.partition().max() << "\nvalid " << (result ? "yes" : "no") << "\n";
    rendered = os.str();
  }
  if (opt.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(opt.output);
    if (!(file << rendered))
      throw Failure{kUsageError, "io", "cannot write " + opt.output};
  }
  return kSuccess;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  std::ifstream file(path);
  if (!file)
    throw Failure{kUsageError, "io", "cannot read " + path};
  std::stringstream buffer;
  buffer << file.rdbuf();
  const io::ColoringDocument doc = io::parse_document(buffer.str());
  if (const auto reason = io::check_document(doc)) {
    out << "invalid: " << *reason << "\n";
    return kVerdictFalse;
  }
  out << "valid height " << doc.height << " partition " << io::format_sequence(doc.partition) << "\n";
  return kSuccess;
}

int cmd_enumerate_partitions(int h, bool count_only, std::ostream& out) {
  std::uint64_t colorable = 0;
  for_each_colorable_partition(h, [&](const Partition& p) {
    ++colorable;
    if (!count_only)
      out << p.to_string() << "\n";
  });
  out << colorable << " colorable of " << count_partitions(node_count_for_height(h), h + 1) << " total\n";
  return kSuccess;
}

int cmd_enumerate_colorings(int h, const std::vector<Part>& parts, bool list, std::ostream& out) {
  const Partition p = partition_for_height(parts, h);
  const auto colorings = enumerate_colorings(p, TreeShape(h));
  if (list)
    for (const auto& c : colorings) {
      for (const Color x : c.colors())
        out << io::color_letter(x);
      out << "\n";
    }
  out << colorings.size() << " colorings of " << p.to_string() << "\n";
  return colorings.empty() ? kVerdictFalse : kSuccess;
}

int cmd_count(int n, bool asymptotic, int order, std::ostream& out) {
  const auto report = counting::count_report(n);
  out << "d_" << n << " = " << report.d << "\n";
  out << "c_" << n << " = " << report.c << "\n";
  if (asymptotic) {
    if (n < 2)
      throw DomainError("count: asymptotic form needs n >= 2");
    counting::PrecisionScope scope(30);
    const counting::Real approx = counting::asymptotic_log_cn(n, order, 30);
    const counting::Real rel = abs(report.log_c - approx) / abs(report.log_c);
    out << "log c_" << n << " = " << report.log_c.str(20, std::ios_base::fixed) << "\n";
    out << "asymptotic (order " << order << ") = " << approx.str(20, std::ios_base::fixed) << "\n";
    out << "relative error = " << (report.log_c == 0 ? std::string("undefined") : rel.str(6, std::ios_base::scientific))
        << "\n";
  }
  return kSuccess;
}

int cmd_constants(int digits, int terms, int order, std::ostream& out) {
  const auto u = counting::quadratic_recurrence_constant(digits);
  const auto sigma = counting::entropy_per_node(digits);
  // Quoted digits are truncated; "..." marks the omitted tail.
  out << "U = " << u.truncated(digits) << (u.certified_truncated_to(digits) ? "..." : "... (uncertified)") << "\n";
  out << "sigma = " << sigma.truncated(digits) << (sigma.certified_truncated_to(digits) ? "..." : "... (uncertified)")
      << "\n";
  const auto s = counting::s_numbers(terms);
  for (std::size_t i = 0; i < s.size(); ++i)
    out << "S_" << i + 1 << " = " << s[i] << "\n";
  out << "f =";
  for (const auto& coef : counting::f_series(order))
    out << ' ' << coef;
  out << "\n";
  return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ancestor-rule colorings of perfect binary trees", "treecolor"};
  app.require_subcommand(1);

  int height = 0;
  std::vector<Part> parts;

  auto* check = app.add_subcommand("check", "Test a partition for colorability");
  check->add_option("parts", parts, "Class sizes")->required();
  check->add_option("--height", height, "Tree height")->required()->check(CLI::Range(0, 62));

  bool expand = false;
  auto* balance = app.add_subcommand("balance", "Balanced partition for a height");
  balance->add_option("--height", height)->required()->check(CLI::Range(0, 62));
  balance->add_flag("--expanded", expand, "Print every part");

  ColorOptions color_opt;
  auto* color = app.add_subcommand("color", "Color a tree with a colorable partition");
  color->add_option("--height", color_opt.height)->required()->check(CLI::Range(0, kMaxTreeHeight));
  color->add_option("--partition", color_opt.parts, "Class sizes");
  color->add_flag("--balanced", color_opt.balanced);
  color->add_flag("--canonical", color_opt.canonical);
  color->add_option("--format", color_opt.format)->check(CLI::IsMember({"json", "dot", "summary"}));
  color->add_flag("--trace", color_opt.trace, "Print the sorted partition and split at each level");
  color->add_option("-o,--output", color_opt.output, "Write the rendered coloring to a file");
  color->add_option("--dot-max-height", color_opt.dot_max_height)->check(CLI::Range(0, kMaxTreeHeight));

  std::string path;
  auto* validate = app.add_subcommand("validate", "Recheck a coloring document");
  validate->add_option("file", path)->required();

  bool count_only = false;
  auto* enum_parts = app.add_subcommand("enumerate-partitions", "List colorable partitions");
  enum_parts->add_option("--height", height)->required()->check(CLI::Range(0, 62));
  enum_parts->add_flag("--count-only", count_only);

  bool list = false;
  auto* enum_colorings = app.add_subcommand("enumerate-colorings", "Distinct colorings for a partition");
  enum_colorings->add_option("--height", height)->required()->check(CLI::Range(0, kMaxTreeHeight));
  enum_colorings->add_option("--partition", parts)->required();
  enum_colorings->add_flag("--list", list);

  int n = 1;
  bool asymptotic = false;
  int order = 5;
  auto* count = app.add_subcommand("count", "Exact coloring counts d_n and c_n");
  count->add_option("--n", n)->required()->check(CLI::Range(1, 1000));
  count->add_flag("--asymptotic", asymptotic);
  count->add_option("--order", order)->check(CLI::Range(0, counting::kMaxSeriesOrder));

  int digits = 10;
  int terms = 6;
  auto* constants = app.add_subcommand("constants", "U, sigma, S_i and f coefficients");
  constants->add_option("--digits", digits)->check(CLI::Range(1, counting::kMaxDigits));
  constants->add_option("--terms", terms)->check(CLI::Range(0, counting::kMaxSNumbers));
  constants->add_option("--order", order)->check(CLI::Range(0, counting::kMaxSeriesOrder));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: usage: " << msg << "\n";
    return kUsageError;
  }

  try {
    if (*check)
      return cmd_check(parts, height, out);
    if (*balance)
      return cmd_balance(height, expand, out);
    if (*color)
      return cmd_color(color_opt, out);
    if (*validate)
      return cmd_validate(path, out);
    if (*enum_parts)
      return cmd_enumerate_partitions(height, count_only, out);
    if (*enum_colorings)
      return cmd_enumerate_colorings(height, parts, list, out);
    if (*count)
      return cmd_count(n, asymptotic, order, out);
    if (*constants)
      return cmd_constants(digits, terms, order, out);
  } catch (const Failure& f) {
    err << "error: " << f.kind << ": " << f.message << "\n";
    return f.code;
  } catch (const CapacityError& e) {
    err << "error: capacity: " << e.what() << "\n";
    return kCapacityError;
  } catch (const ContractError& e) {
    err << "error: contract: " << e.what() << "\n";
    return kVerdictFalse;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

} // namespace treecolor::cli
