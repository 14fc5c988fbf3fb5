#include "treecolor/engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "treecolor/error.hpp"

namespace treecolor {

LabelPermutation LabelPermutation::sorting(std::span<const Part> counts) {
  LabelPermutation p;
  p.forward_.resize(counts.size());
  std::iota(p.forward_.begin(), p.forward_.end(), std::size_t{0});
  std::stable_sort(p.forward_.begin(), p.forward_.end(),
                   [&](std::size_t x, std::size_t y) { return counts[x] < counts[y]; });
  p.inverse_.resize(counts.size());
  for (std::size_t pos = 0; pos < p.forward_.size(); ++pos)
    p.inverse_[p.forward_[pos]] = pos;
  return p;
}

namespace {

// Halving loop shared by both branches, labels [first, h].
void balance_from(std::span<const Part> a, std::size_t first, SplitState state, SplitResult& out,
                  std::vector<SplitState>* steps) {
  const std::size_t h = a.size() - 1;
  for (std::size_t i = first; i <= h; ++i) {
    const Part half = a[i] / 2;
    Part& b = out.b[i - 1];
    Part& c = out.c[i - 1];
    if (a[i] % 2 == 0) {
      b = c = half;
    } else {
      b = half + static_cast<Part>(state.token_b);
      c = half + static_cast<Part>(state.token_c);
      state.token_b = 1 - state.token_b;
      state.token_c = 1 - state.token_c;
    }
    state.label = static_cast<int>(i);
    state.beta += b;
    state.gamma += c;
    if (steps)
      steps->push_back(state);
  }
}

// `a` is sorted and colorable with h >= 1.
SplitResult split_sorted(std::span<const Part> a, std::vector<SplitState>* steps) {
  const std::size_t h = a.size() - 1;
  SplitResult out;
  out.b.resize(h);
  out.c.resize(h);
  SplitState state;

  auto record = [&](std::size_t label) {
    state.label = static_cast<int>(label);
    state.beta += out.b[label - 1];
    state.gamma += out.c[label - 1];
    if (steps)
      steps->push_back(state);
  };

  if (a[1] == 2) {
    out.b[0] = out.c[0] = 1;
    record(1);
    balance_from(a, 2, state, out, steps);
    return out;
  }

  // a_1 >= 3 forces h >= 2: the subtree roots take colors 1 and 2.
  out.b[0] = 1;
  out.c[0] = a[1] - 1;
  record(1);
  out.b[1] = a[2] - 1;
  out.c[1] = 1;
  record(2);
  if (h < 3)
    return out;
  const Part r3 = (a[1] + a[2] + a[3]) % 2;
  out.b[2] = (a[3] - a[2] + a[1] + r3) / 2;
  out.c[2] = (a[3] + a[2] - a[1] - r3) / 2;
  state.token_b = static_cast<int>(1 - r3);
  state.token_c = static_cast<int>(r3);
  record(3);
  balance_from(a, 4, state, out, steps);
  return out;
}

void require_colorable(const Partition& a, const char* what) {
  if (const auto verdict = is_colorable(a); !verdict)
    throw ContractError(std::string(what) + ": partition " + a.to_string() + " is not colorable (" +
                        verdict.describe() + ")");
}

struct ColorClass {
  Part count;
  Color label;
};

class Painter {
public:
  explicit Painter(std::span<Color> out) : out_(out) {}

  void paint(NodeId node, std::vector<ColorClass> classes) {
    std::vector<Part> counts(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
      counts[i] = classes[i].count;
    const auto perm = LabelPermutation::sorting(counts);
    const auto forward = perm.forward();

    out_[node - 1] = classes[forward[0]].label;
    if (classes.size() == 1)
      return;

    std::vector<Part> sorted(counts.size());
    for (std::size_t pos = 0; pos < sorted.size(); ++pos)
      sorted[pos] = counts[forward[pos]];
    const SplitResult split = split_sorted(sorted, nullptr);

    // Child label i (1-based sorted position) maps back to the parent's label.
    std::vector<ColorClass> left(split.b.size());
    std::vector<ColorClass> right(split.c.size());
    for (std::size_t i = 0; i < split.b.size(); ++i) {
      const Color label = classes[forward[i + 1]].label;
      left[i] = {split.b[i], label};
      right[i] = {split.c[i], label};
    }
    paint(2 * node, std::move(left));
    paint(2 * node + 1, std::move(right));
  }

private:
  std::span<Color> out_;
};

void check_shape(const Partition& a, const TreeShape& shape, const char* what) {
  if (a.height() != shape.height())
    throw DomainError(std::string(what) + ": partition has " + std::to_string(a.size()) +
                      " parts, tree of height " + std::to_string(shape.height()) + " needs " +
                      std::to_string(shape.height() + 1));
}

} // namespace

SplitResult split_partition(const Partition& a, std::vector<SplitState>* steps) {
  if (a.height() == 0)
    throw DomainError("split_partition: a tree of height 0 has no subtrees");
  require_colorable(a, "split_partition");
  return split_sorted(a.parts(), steps);
}

Coloring color_tree(const Partition& a, const TreeShape& shape) {
  check_shape(a, shape, "color_tree");
  if (shape.height() > kMaxColorTreeHeight)
    throw CapacityError("color_tree: height " + std::to_string(shape.height()) + " exceeds limit " +
                        std::to_string(kMaxColorTreeHeight));
  require_colorable(a, "color_tree");

  Coloring coloring(shape);
  std::vector<ColorClass> classes(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    classes[i] = {a[i], static_cast<Color>(i)};
  Painter(coloring.colors()).paint(1, std::move(classes));
  return coloring;
}

std::vector<TraceEntry> trace_color_tree(const Partition& a, const TreeShape& shape) {
  check_shape(a, shape, "trace_color_tree");
  require_colorable(a, "trace_color_tree");

  std::vector<TraceEntry> trace;
  std::vector<Partition> level{a};
  for (int height = shape.height(); height >= 1; --height) {
    std::vector<Partition> next;
    auto push_unique = [&](Partition p) {
      if (std::find(next.begin(), next.end(), p) == next.end())
        next.push_back(std::move(p));
    };
    for (const Partition& parent : level) {
      SplitResult split = split_sorted(parent.parts(), nullptr);
      push_unique(Partition(split.b));
      push_unique(Partition(split.c));
      trace.push_back({height, parent, std::move(split.b), std::move(split.c)});
    }
    level = std::move(next);
  }
  return trace;
}

namespace {

// Search over per-label splits b_i in [1, a_i - 1] with sum and subset-bound
// pruning on the partially assigned sides.
class SplitSearch {
public:
  explicit SplitSearch(const Partition& a)
      : a_(a.parts().subspan(1)), target_((Part{1} << a.height()) - 1) {
    suffix_max_.assign(a_.size() + 1, 0);
    for (std::size_t i = a_.size(); i-- > 0;)
      suffix_max_[i] = suffix_max_[i + 1] + (a_[i] - 1);
  }

  std::vector<SplitPair> run() {
    descend(0, 0);
    return {found_.begin(), found_.end()};
  }

private:
  // Sorted insertion, then every prefix of k values must reach 2^k - 1.
  static bool insert_checked(std::vector<Part>& side, Part value) {
    side.insert(std::upper_bound(side.begin(), side.end(), value), value);
    Part prefix = 0;
    int units = 0;
    for (std::size_t k = 0; k < side.size(); ++k) {
      prefix += side[k];
      units += side[k] == 1;
      if (prefix < (Part{1} << (k + 1)) - 1 || units > 1)
        return false;
    }
    return true;
  }

  static void erase_one(std::vector<Part>& side, Part value) {
    side.erase(std::lower_bound(side.begin(), side.end(), value));
  }

  void descend(std::size_t i, Part sum_b) {
    if (i == a_.size()) {
      if (sum_b != target_)
        return;
      Partition b(side_b_);
      Partition c(side_c_);
      if (!is_colorable(b) || !is_colorable(c))
        return;
      if (c < b)
        std::swap(b, c);
      found_.insert(SplitPair{std::move(b), std::move(c)});
      return;
    }
    const std::size_t remaining = a_.size() - i - 1;
    for (Part b = 1; b + 1 <= a_[i]; ++b) {
      const Part after = sum_b + b;
      if (after + remaining > target_)
        break;
      if (after + suffix_max_[i + 1] < target_)
        continue;
      const bool ok_b = insert_checked(side_b_, b);
      const bool ok_c = insert_checked(side_c_, a_[i] - b);
      if (ok_b && ok_c)
        descend(i + 1, after);
      erase_one(side_b_, b);
      erase_one(side_c_, a_[i] - b);
    }
  }

  std::span<const Part> a_;
  Part target_;
  std::vector<Part> suffix_max_;
  std::vector<Part> side_b_;
  std::vector<Part> side_c_;
  std::set<SplitPair> found_;
};

// Labeled colorings with exact class budgets, collected modulo relabeling.
class ColoringSearch {
public:
  ColoringSearch(const Partition& a, const TreeShape& shape)
      : shape_(shape), budget_(a.parts().begin(), a.parts().end()), work_(shape),
        path_(shape.node_count() + 1, 0) {}

  std::vector<Coloring> run() {
    descend(1);
    return {found_.begin(), found_.end()};
  }

private:
  void descend(NodeId node) {
    if (node > shape_.node_count()) {
      found_.insert(relabel_by_first_appearance(work_));
      return;
    }
    const std::uint32_t above = path_[parent(node)];
    for (std::size_t c = 0; c < budget_.size(); ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      if ((above & bit) || budget_[c] == 0)
        continue;
      --budget_[c];
      work_.set(node, static_cast<Color>(c));
      path_[node] = above | bit;
      descend(node + 1);
      ++budget_[c];
    }
  }

  TreeShape shape_;
  std::vector<Part> budget_;
  Coloring work_;
  std::vector<std::uint32_t> path_; // index 0 is the empty path above the root
  std::set<Coloring> found_;
};

} // namespace

std::vector<SplitPair> enumerate_splits(const Partition& a) {
  if (a.height() == 0)
    throw DomainError("enumerate_splits: a tree of height 0 has no subtrees");
  if (a.height() > kMaxEnumerateSplitsHeight)
    throw CapacityError("enumerate_splits: height " + std::to_string(a.height()) + " exceeds limit " +
                        std::to_string(kMaxEnumerateSplitsHeight));
  require_colorable(a, "enumerate_splits");
  return SplitSearch(a).run();
}

std::vector<Coloring> enumerate_colorings(const Partition& a, const TreeShape& shape) {
  check_shape(a, shape, "enumerate_colorings");
  if (shape.height() > kMaxEnumerateColoringsHeight)
    throw CapacityError("enumerate_colorings: height " + std::to_string(shape.height()) +
                        " exceeds limit " + std::to_string(kMaxEnumerateColoringsHeight));
  return ColoringSearch(a, shape).run();
}

} // namespace treecolor
