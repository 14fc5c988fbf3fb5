#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "treecolor/counting.hpp"
#include "treecolor/error.hpp"
#include "treecolor/oracle.hpp"

using namespace treecolor;

TEST(LabeledColorings, Totals) {
  const std::uint64_t expected[] = {1, 2, 12, 576, 1658880};
  for (int h = 0; h <= 4; ++h)
    EXPECT_EQ(oracle::enumerate_labeled_colorings(TreeShape(h), {}), expected[h]) << "h=" << h;
}

TEST(LabeledColorings, MatchesRecurrence) {
  for (int h = 0; h <= 4; ++h)
    EXPECT_EQ(counting::BigInt(oracle::enumerate_labeled_colorings(TreeShape(h), {})),
              counting::count_labeled_colorings(h + 1));
}

TEST(LabeledColorings, AllValid) {
  for (int h = 0; h <= 3; ++h) {
    std::uint64_t n = 0;
    oracle::enumerate_labeled_colorings(TreeShape(h), [&](const Coloring& c) {
      ++n;
      EXPECT_TRUE(validate_coloring(c).ok());
    });
    EXPECT_GT(n, 0u);
  }
}

TEST(DistinctColorings, Counts) {
  const std::uint64_t expected[] = {1, 1, 2, 24, 13824};
  for (int h = 0; h <= 4; ++h)
    EXPECT_EQ(oracle::count_distinct_colorings(TreeShape(h)), expected[h]) << "h=" << h;
}

TEST(DistinctColorings, MatchesProductFormula) {
  for (int h = 0; h <= 4; ++h)
    EXPECT_EQ(counting::BigInt(oracle::count_distinct_colorings(TreeShape(h))), counting::count_colorings(h + 1));
}

TEST(DistinctColorings, DedupByKeyIsOrderIndependent) {
  const TreeShape t(3);
  std::vector<Coloring> all;
  oracle::enumerate_labeled_colorings(t, [&](const Coloring& c) { all.push_back(c); });
  ASSERT_EQ(all.size(), 576u);
  std::mt19937_64 rng(3);
  for (int round = 0; round < 3; ++round) {
    std::shuffle(all.begin(), all.end(), rng);
    std::set<Coloring> keys;
    for (const auto& c : all)
      keys.insert(relabel_by_first_appearance(c));
    EXPECT_EQ(keys.size(), 24u);
    for (const auto& k : keys)
      EXPECT_EQ(relabel_by_first_appearance(k), k);
  }
}

TEST(Census, HeightTwo) {
  const auto census = oracle::census_by_partition(TreeShape(2));
  EXPECT_EQ(census, (std::map<Partition, std::uint64_t>{{{1, 2, 4}, 1}, {{1, 3, 3}, 1}}));
}

TEST(Census, HeightThree) {
  const auto census = oracle::census_by_partition(TreeShape(3));
  EXPECT_EQ(census.size(), 8u);
  EXPECT_EQ(census.at(Partition{1, 2, 6, 6}), 3u);
  std::uint64_t total = 0;
  for (const auto& [p, n] : census)
    total += n;
  EXPECT_EQ(total, 24u);
}

TEST(Census, KeysAreTheColorablePartitions) {
  for (int h = 0; h <= 4; ++h) {
    const auto census = oracle::census_by_partition(TreeShape(h));
    std::vector<Partition> keys;
    std::uint64_t total = 0;
    for (const auto& [p, n] : census) {
      keys.push_back(p);
      total += n;
    }
    EXPECT_EQ(keys, enumerate_colorable_partitions(h).colorable) << "h=" << h;
    EXPECT_EQ(total, oracle::count_distinct_colorings(TreeShape(h)));
  }
}

TEST(Oracle, Guard) {
  EXPECT_THROW((void)oracle::count_distinct_colorings(TreeShape(5)), CapacityError);
  EXPECT_THROW(oracle::enumerate_labeled_colorings(TreeShape(5), {}), CapacityError);
  EXPECT_THROW((void)oracle::census_by_partition(TreeShape(5)), CapacityError);
}
