#include "treecolor/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "treecolor/error.hpp"

namespace treecolor {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw DomainError("partition: empty sequence");
  if (parts_.size() > 64)
    throw DomainError("partition: more than 64 parts");
  if (std::find(parts_.begin(), parts_.end(), Part{0}) != parts_.end())
    throw DomainError("partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end());
}

Partition::Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

Part Partition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Part{0});
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      os << ", ";
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::string ColorabilityVerdict::describe() const {
  std::ostringstream os;
  switch (failure) {
  case ColorabilityFailure::none:
    return "colorable";
  case ColorabilityFailure::sum_mismatch:
    os << "sum-rule: parts sum to " << actual << ", expected " << required;
    break;
  case ColorabilityFailure::unit_part_count:
    os << "unit-part: found " << k << " parts equal to 1, expected exactly 1";
    break;
  case ColorabilityFailure::prefix_bound:
    os << "prefix-bound: k=" << k << " smallest parts sum to " << actual << " < " << required;
    break;
  }
  return os.str();
}

ColorabilityVerdict is_colorable(const Partition& p) {
  const int h = p.height();
  ColorabilityVerdict v;
  if (h > 62) {
    v.failure = ColorabilityFailure::sum_mismatch;
    v.actual = p.sum();
    return v;
  }
  const Part expected = node_count_for_height(h);
  if (const Part total = p.sum(); total != expected) {
    v.failure = ColorabilityFailure::sum_mismatch;
    v.actual = total;
    v.required = expected;
    return v;
  }
  const auto units = std::count(p.parts().begin(), p.parts().end(), Part{1});
  if (units != 1) {
    v.failure = ColorabilityFailure::unit_part_count;
    v.k = static_cast<int>(units);
    v.actual = static_cast<Part>(units);
    v.required = 1;
    return v;
  }
  Part prefix = 0;
  for (int k = 1; k <= h + 1; ++k) {
    prefix += p[k - 1];
    const Part bound = (Part{1} << k) - 1;
    if (prefix < bound) {
      v.failure = ColorabilityFailure::prefix_bound;
      v.k = k;
      v.actual = prefix;
      v.required = bound;
      return v;
    }
  }
  return v;
}

bool is_colorable_upper(const Partition& p) {
  const int h = p.height();
  if (h > 62)
    return false;
  const Part total = node_count_for_height(h);
  if (p.sum() != total)
    return false;
  if (std::count(p.parts().begin(), p.parts().end(), Part{1}) != 1)
    return false;
  const Part full = Part{1} << (h + 1);
  Part suffix = 0;
  for (int k = 1; k <= h + 1; ++k) {
    suffix += p[p.size() - static_cast<std::size_t>(k)];
    if (suffix > full - (Part{1} << (h + 1 - k)))
      return false;
  }
  return true;
}

Partition canonical_partition(int h) {
  if (h < 0 || h > 62)
    throw DomainError("canonical_partition: height out of range");
  std::vector<Part> parts(static_cast<std::size_t>(h) + 1);
  for (int i = 0; i <= h; ++i)
    parts[static_cast<std::size_t>(i)] = Part{1} << i;
  return Partition(std::move(parts));
}

BalancedSpec balanced_spec(int h) {
  if (h < 1 || h > 62)
    throw DomainError("balanced_spec: height must be in [1, 62]");
  BalancedSpec s;
  s.m = node_count_for_height(h) - 1;
  s.q = s.m / static_cast<Part>(h);
  s.r = s.m % static_cast<Part>(h);
  return s;
}

Partition balanced_partition(int h) {
  if (h == 0)
    return Partition{1};
  const BalancedSpec s = balanced_spec(h);
  std::vector<Part> parts;
  parts.reserve(static_cast<std::size_t>(h) + 1);
  parts.push_back(1);
  parts.insert(parts.end(), static_cast<std::size_t>(h) - s.r, s.q);
  parts.insert(parts.end(), s.r, s.q + 1);
  return Partition(std::move(parts));
}

namespace {

// Non-decreasing composition with a_0 = 1, a_1 >= 2 and prefix pruning.
class ColorableGenerator {
public:
  ColorableGenerator(int h, const std::function<void(const Partition&)>& visit)
      : h_(h), total_(node_count_for_height(h)), visit_(visit), parts_(static_cast<std::size_t>(h) + 1) {}

  void run() {
    parts_[0] = 1;
    if (h_ == 0) {
      visit_(Partition(parts_));
      return;
    }
    extend(1, 2, 1);
  }

private:
  void extend(int k, Part lo, Part sum) {
    const Part remaining = static_cast<Part>(h_ + 1 - k);
    if (k == h_) {
      const Part last = total_ - sum;
      if (last >= lo && sum + last >= (Part{1} << (k + 1)) - 1) {
        parts_[static_cast<std::size_t>(k)] = last;
        visit_(Partition(parts_));
      }
      return;
    }
    const Part bound = (Part{1} << (k + 1)) - 1;
    for (Part x = lo; sum + x * remaining <= total_; ++x) {
      if (sum + x < bound)
        continue;
      parts_[static_cast<std::size_t>(k)] = x;
      extend(k + 1, x, sum + x);
    }
  }

  int h_;
  Part total_;
  const std::function<void(const Partition&)>& visit_;
  std::vector<Part> parts_;
};

void partitions_rec(Part n, int k, Part lo, std::vector<Part>& acc,
                    const std::function<void(const Partition&)>& visit) {
  if (k == 1) {
    if (n >= lo) {
      acc.push_back(n);
      visit(Partition(acc));
      acc.pop_back();
    }
    return;
  }
  for (Part x = lo; x * static_cast<Part>(k) <= n; ++x) {
    acc.push_back(x);
    partitions_rec(n - x, k - 1, x, acc, visit);
    acc.pop_back();
  }
}

} // namespace

void for_each_colorable_partition(int h, const std::function<void(const Partition&)>& visit) {
  if (h < 0)
    throw DomainError("enumerate: negative height");
  if (h > kMaxEnumerateVisitHeight)
    throw CapacityError("enumerate: height " + std::to_string(h) + " exceeds limit " +
                        std::to_string(kMaxEnumerateVisitHeight));
  ColorableGenerator(h, visit).run();
}

std::uint64_t count_partitions(Part n, int k) {
  if (k <= 0)
    return n == 0 && k == 0 ? 1 : 0;
  if (n < static_cast<Part>(k))
    return 0;
  // p(n, k) = p(n - 1, k - 1) + p(n - k, k), tabulated over m = n - k.
  const Part m = n - static_cast<Part>(k);
  // ways[j][t]: partitions of t into at most j parts.
  std::vector<std::vector<std::uint64_t>> ways(static_cast<std::size_t>(k) + 1,
                                               std::vector<std::uint64_t>(m + 1, 0));
  for (int j = 0; j <= k; ++j)
    ways[static_cast<std::size_t>(j)][0] = 1;
  for (int j = 1; j <= k; ++j)
    for (Part t = 1; t <= m; ++t) {
      auto& row = ways[static_cast<std::size_t>(j)];
      row[t] = ways[static_cast<std::size_t>(j) - 1][t] + (t >= static_cast<Part>(j) ? row[t - j] : 0);
    }
  return ways[static_cast<std::size_t>(k)][m];
}

PartitionCensus enumerate_colorable_partitions(int h) {
  if (h > kMaxEnumerateListHeight)
    throw CapacityError("enumerate: height " + std::to_string(h) + " exceeds list limit " +
                        std::to_string(kMaxEnumerateListHeight));
  PartitionCensus census;
  for_each_colorable_partition(h, [&](const Partition& p) { census.colorable.push_back(p); });
  census.total = count_partitions(node_count_for_height(h), h + 1);
  return census;
}

void for_each_partition(Part n, int k, const std::function<void(const Partition&)>& visit) {
  if (k <= 0)
    throw DomainError("for_each_partition: need at least one part");
  std::vector<Part> acc;
  acc.reserve(static_cast<std::size_t>(k));
  partitions_rec(n, k, 1, acc, visit);
}

} // namespace treecolor
