// Acceptance suite: one PASS/FAIL line per criterion, each under a wall-clock budget.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "treecolor/counting.hpp"
#include "treecolor/engine.hpp"
#include "treecolor/oracle.hpp"
#include "treecolor/partition.hpp"
#include "treecolor/tree.hpp"

using namespace treecolor;
using counting::BigInt;
using counting::Real;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> body;
};

std::string seq(const std::vector<Part>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

bool colors_match(const Partition& a) {
  TreeShape shape(a.height());
  auto res = validate_coloring(color_tree(a, shape));
  return res.ok() && res.partition() == a;
}

Outcome table_reproduction() {
  const std::vector<Partition> table{
      Partition({1}),
      Partition({1, 2}),
      Partition({1, 3, 3}),
      Partition({1, 4, 5, 5}),
      Partition({1, 7, 7, 8, 8}),
      Partition({1, 12, 12, 12, 13, 13}),
      Partition({1, 21, 21, 21, 21, 21, 21}),
      Partition({1, 36, 36, 36, 36, 36, 37, 37}),
      Partition({1, 63, 63, 64, 64, 64, 64, 64, 64}),
      Partition({1, 113, 113, 113, 113, 114, 114, 114, 114, 114}),
      Partition({1, 204, 204, 204, 204, 205, 205, 205, 205, 205, 205}),
      Partition({1, 372, 372, 372, 372, 372, 372, 372, 372, 372, 373, 373})};
  Outcome o;
  for (int h = 0; h <= 11; ++h)
    o.expect(balanced_partition(h) == table[static_cast<std::size_t>(h)],
             "h=" + std::to_string(h) + " got " + balanced_partition(h).to_string());
  return o;
}

Outcome colorability_census() {
  Outcome o;
  const std::vector<Partition> listed{
      Partition({1, 2, 4, 8}), Partition({1, 2, 5, 7}), Partition({1, 2, 6, 6}),
      Partition({1, 3, 3, 8}), Partition({1, 3, 4, 7}), Partition({1, 3, 5, 6}),
      Partition({1, 4, 4, 6}), Partition({1, 4, 5, 5})};
  std::size_t total = 0;
  std::vector<Partition> colorable;
  for_each_partition(15, 4, [&](const Partition& p) {
    ++total;
    if (is_colorable(p)) colorable.push_back(p);
  });
  o.expect(total == 27, "h=3 total " + std::to_string(total));
  o.expect(std::set<Partition>(colorable.begin(), colorable.end()) ==
               std::set<Partition>(listed.begin(), listed.end()) && colorable.size() == 8,
           "h=3 colorable set differs");
  auto census = enumerate_colorable_partitions(3);
  o.expect(census.total == 27 && census.colorable.size() == 8, "enumerate_colorable_partitions(3)");
  auto two = enumerate_colorable_partitions(2);
  o.expect(two.colorable == std::vector<Partition>{Partition({1, 2, 4}), Partition({1, 3, 3})},
           "h=2 colorable set differs");
  return o;
}

Outcome oracle_counts() {
  Outcome o;
  const std::vector<std::uint64_t> labeled{1, 2, 12, 576, 1658880};
  const std::vector<std::uint64_t> distinct{1, 1, 2, 24, 13824};
  for (int h = 0; h <= 4; ++h) {
    TreeShape s(h);
    auto l = oracle::enumerate_labeled_colorings(s, [](const Coloring&) {});
    o.expect(l == labeled[static_cast<std::size_t>(h)], "labeled h=" + std::to_string(h) + " = " + std::to_string(l));
    auto d = oracle::count_distinct_colorings(s);
    o.expect(d == distinct[static_cast<std::size_t>(h)], "distinct h=" + std::to_string(h) + " = " + std::to_string(d));
  }
  auto census = oracle::census_by_partition(TreeShape(3));
  std::uint64_t sum = 0;
  for (const auto& [p, n] : census) sum += n;
  o.expect(census.size() == 8, "census size " + std::to_string(census.size()));
  o.expect(census.count(Partition({1, 2, 6, 6})) && census.at(Partition({1, 2, 6, 6})) == 3,
           "multiplicity of (1, 2, 6, 6)");
  o.expect(sum == 24, "census sum " + std::to_string(sum));
  return o;
}

Outcome engine_soundness() {
  Outcome o;
  std::size_t checked = 0;
  for (int h = 0; h <= 5; ++h)
    for_each_colorable_partition(h, [&](const Partition& a) {
      ++checked;
      o.expect(colors_match(a), "failed on " + a.to_string());
    });
  for (int h = 6; h <= 16; ++h) o.expect(colors_match(balanced_partition(h)), "balanced h=" + std::to_string(h));
  o.detail = o.ok ? std::to_string(checked) + " exhaustive partitions + 11 balanced" : o.detail;
  return o;
}

Outcome trace_fidelity() {
  Outcome o;
  auto trace = trace_color_tree(balanced_partition(8), TreeShape(8));
  struct Line {
    int level;
    std::vector<Part> a, b, c;
  };
  const std::vector<Line> expected{
      {8, {1, 63, 63, 64, 64, 64, 64, 64, 64}, {1, 62, 32, 32, 32, 32, 32, 32}, {62, 1, 32, 32, 32, 32, 32, 32}},
      {7, {1, 32, 32, 32, 32, 32, 32, 62}, {1, 31, 16, 16, 16, 16, 31}, {31, 1, 16, 16, 16, 16, 31}},
      {6, {1, 16, 16, 16, 16, 31, 31}, {1, 15, 8, 8, 16, 15}, {15, 1, 8, 8, 15, 16}},
      {5, {1, 8, 8, 15, 15, 16}, {1, 7, 8, 7, 8}, {7, 1, 7, 8, 8}},
      {4, {1, 7, 7, 8, 8}, {1, 6, 4, 4}, {6, 1, 4, 4}},
      {3, {1, 4, 4, 6}, {1, 3, 3}, {3, 1, 3}},
      {2, {1, 3, 3}, {1, 2}, {2, 1}}};
  for (const auto& want : expected) {
    std::size_t at_level = 0;
    const TraceEntry* hit = nullptr;
    for (const auto& e : trace)
      if (e.level == want.level) {
        ++at_level;
        hit = &e;
      }
    const std::string tag = "level " + std::to_string(want.level);
    o.expect(at_level == 1 && hit, tag + ": expected one sorted partition");
    if (!hit) continue;
    o.expect(hit->parent == Partition(want.a), tag + " A = " + hit->parent.to_string());
    o.expect(hit->b == want.b, tag + " B = " + seq(hit->b));
    o.expect(hit->c == want.c, tag + " C = " + seq(hit->c));
  }
  return o;
}

Outcome split_multiplicity() {
  Outcome o;
  auto pairs = enumerate_splits(Partition({1, 2, 5, 8, 15}));
  const std::vector<SplitPair> want{{Partition({1, 2, 4, 8}), Partition({1, 3, 4, 7})},
                                    {Partition({1, 2, 5, 7}), Partition({1, 3, 3, 8})}};
  o.expect(pairs == want, "(1, 2, 5, 8, 15) gave " + std::to_string(pairs.size()) + " pairs");
  o.expect(enumerate_splits(Partition({1, 3, 3})).size() == 1, "(1, 3, 3) not unique");
  return o;
}

Outcome counting_exactness() {
  Outcome o;
  for (int n = 1; n <= 16; ++n) {
    BigInt rec = counting::count_labeled_colorings(n);
    o.expect(rec == counting::count_labeled_colorings_product(n), "recurrence vs product at n=" + std::to_string(n));
    o.expect(rec == counting::factorial(n) * counting::count_colorings(n), "d_n vs n! c_n at n=" + std::to_string(n));
  }
  o.expect(counting::count_colorings(6) == BigInt("22932357120"), "c_6 = " + counting::count_colorings(6).str());
  return o;
}

Outcome constants() {
  Outcome o;
  auto u = counting::quadratic_recurrence_constant(10);
  auto s = counting::entropy_per_node(10);
  o.expect(u.truncated(10) == "1.6616879496" && u.certified_truncated_to(10), "U = " + u.truncated(10));
  o.expect(s.truncated(10) == "0.5078339228" && s.certified_truncated_to(10), "sigma = " + s.truncated(10));
  Real gap = abs(Real(exp(s.value)) - u.value);
  o.expect(gap < Real("1e-10"), "exp(sigma) vs U gap " + gap.str(3));
  auto sn = counting::s_numbers(6);
  const std::vector<BigInt> s_want{2, 6, 26, 150, 1082, 9366};
  o.expect(std::vector<BigInt>(sn.begin(), sn.end()) == s_want, "S_1..S_6 differ");
  auto f = counting::f_series(5);
  const std::vector<BigInt> f_want{1, -2, 5, -16, 66, -348};
  o.expect(f == f_want, "f coefficients differ");
  return o;
}

Outcome asymptotics() {
  Outcome o;
  std::vector<Real> errs;
  std::string detail;
  for (int n : {6, 8, 10, 12}) {
    Real exact = counting::log_count_colorings(n);
    Real rel = abs(exact - counting::asymptotic_log_cn(n, 5)) / abs(exact);
    errs.push_back(rel);
    detail += " n=" + std::to_string(n) + ":" + rel.str(3);
  }
  for (std::size_t i = 1; i < errs.size(); ++i) o.expect(errs[i] < errs[i - 1], "not monotone:" + detail);
  o.expect(errs.back() < Real("1e-4"), "n=12 error too large:" + detail);
  auto sigma = counting::entropy_per_node(30);
  Real per_node = counting::log_count_colorings(20) / Real((1u << 20) - 1);
  Real d20 = abs(per_node - sigma.value);
  o.expect(d20 < Real("1e-3"), "n=20 per-node gap " + d20.str(3));
  if (o.ok) o.detail = detail.substr(1) + " n=20 gap:" + d20.str(3);
  return o;
}

Outcome bound_equivalence() {
  Outcome o;
  std::size_t seen = 0;
  for (int h = 0; h <= 5; ++h)
    for_each_partition(node_count_for_height(h), h + 1, [&](const Partition& p) {
      ++seen;
      o.expect(is_colorable(p).failure == ColorabilityFailure::none ? is_colorable_upper(p) : !is_colorable_upper(p),
               "disagree on " + p.to_string());
    });
  if (o.ok) o.detail = std::to_string(seen) + " partitions";
  return o;
}

Outcome scale_check() {
  Outcome o;
  auto a = balanced_partition(20);
  TreeShape shape(20);
  auto c = color_tree(a, shape);
  auto res = validate_coloring(c);
  o.expect(res.ok(), "invalid coloring");
  o.expect(res.ok() && res.partition() == a, "partition mismatch");
  if (o.ok) o.detail = std::to_string(shape.node_count()) + " nodes";
  return o;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "balanced table h=0..11", 1.0, table_reproduction},
      {2, "colorability census h=2,3", 1.0, colorability_census},
      {3, "oracle counts h=0..4", 120.0, oracle_counts},
      {4, "engine soundness h<=5 exhaustive, balanced 6..16", 60.0, engine_soundness},
      {5, "balanced h=8 trace", 5.0, trace_fidelity},
      {6, "split multiplicity", 5.0, split_multiplicity},
      {7, "counting exactness n<=16, c_6", 10.0, counting_exactness},
      {8, "constants U, sigma, S_i, f", 10.0, constants},
      {9, "asymptotic series accuracy", 5.0, asymptotics},
      {10, "lower/upper bound forms agree h<=5", 30.0, bound_equivalence},
      {11, "balanced h=20 colored and validated", 30.0, scale_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_s) {
      o.ok = false;
      o.detail = "over budget of " + std::to_string(c.budget_s) + " s";
    }
    if (!o.ok) ++failed;
    std::printf("%s  criterion %2d  %-50s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
