#include <gtest/gtest.h>

#include <random>

#include "acdaa/errors.hpp"
#include "acdaa/metrics.hpp"
#include "support.hpp"

namespace acdaa {
namespace {

Classification of(std::vector<VertexSet> classes, std::size_t n) {
  return Classification(std::move(classes), n);
}

Classification singletons(std::size_t n) {
  std::vector<VertexSet> classes;
  for (std::size_t i = 0; i < n; ++i) classes.push_back({static_cast<Vertex>(i)});
  return of(classes, n);
}

TEST(Classification, Canonical) {
  const auto c = of({{5, 3}, {2, 0}, {4, 1}}, 6);
  EXPECT_EQ(c.classes(), (std::vector<VertexSet>{{0, 2}, {1, 4}, {3, 5}}));
  EXPECT_EQ(c.labels(), (std::vector<int>{0, 1, 0, 2, 1, 2}));
  EXPECT_EQ(Classification::from_labels(std::vector<int>{7, 3, 7, 9, 3, 9}), c);
}

TEST(Classification, RejectsBadPartitions) {
  EXPECT_THROW(of({{0, 1}, {1, 2}}, 3), InvalidInput);
  EXPECT_THROW(of({{0, 1}}, 3), InvalidInput);
  EXPECT_THROW(of({{0, 1, 2}, {}}, 3), InvalidInput);
  EXPECT_THROW(of({{0, 3}}, 2), InvalidInput);
}

TEST(RandIndex, Examples) {
  const auto a = of({{0, 1}, {2, 3}}, 4);
  EXPECT_EQ(rand_index(a, a), 1.0);
  EXPECT_EQ(rand_index(singletons(3), Classification::single_class(3)), 0.0);
  EXPECT_DOUBLE_EQ(rand_index(a, of({{0, 2}, {1, 3}}, 4)), 2.0 / 6.0);
}

TEST(RandIndex, MismatchedSets) {
  EXPECT_THROW(rand_index(singletons(3), singletons(4)), InvalidInput);
}

TEST(RandIndex, PropertiesAgainstPairOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
    const auto a = testing::random_partition(n, 1 + trial % 5, rng);
    const auto b = testing::random_partition(n, 1 + trial % 4, rng);
    const double r = rand_index(a, b);
    EXPECT_EQ(r, testing::rand_by_pairs(a, b));
    EXPECT_EQ(r, rand_index(b, a));
    EXPECT_GE(r, 0.0);
    EXPECT_LE(r, 1.0);
    EXPECT_EQ(rand_index(a, a), 1.0);
    // Equal iff identical iff RAND is 1.
    EXPECT_EQ(a == b, r == 1.0);
  }
}

TEST(Concordance, Examples) {
  const auto a = of({{0, 1}, {2, 3}}, 4);
  const std::vector<Classification> same{a, a, a};
  EXPECT_EQ(concordance(same), 1.0);
  const std::vector<Classification> mixed{singletons(3), Classification::single_class(3), singletons(3)};
  EXPECT_EQ(concordance(mixed), 0.0);
  const std::vector<Classification> one{a};
  EXPECT_EQ(concordance(one), 1.0);
  EXPECT_THROW(concordance(std::span<const Classification>{}), InvalidInput);
}

TEST(Concordance, BoundedByEveryPair) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Classification> family;
    for (int i = 0; i < 5; ++i) family.push_back(testing::random_partition(10, 3, rng));
    const double c = concordance(family);
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) EXPECT_LE(c, rand_index(family[i], family[j]));
    }
  }
}

TEST(RandTable, ParallelMatchesSerial) {
  std::mt19937_64 rng(10);
  std::vector<Classification> items;
  for (int i = 0; i < 120; ++i) items.push_back(testing::random_partition(200, 2 + i % 7, rng));
  EXPECT_EQ(rand_table(items), rand_table_serial(items));
}

TEST(Degeneracy, Examples) {
  EXPECT_FALSE(is_degenerate(of({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, 10)));
  EXPECT_TRUE(is_degenerate(of({{0, 1, 2, 3, 4, 5, 6, 7, 8}, {9}}, 10)));
  EXPECT_TRUE(is_degenerate(of({{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9}}, 10)));
}

TEST(Uniformity, Examples) {
  EXPECT_EQ(uniformity(of({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, 10)), 1.0);
  EXPECT_EQ(uniformity(of({{0, 1, 2, 3, 4, 5}, {6, 7, 8}}, 9)), 2.0);
  EXPECT_EQ(uniformity(Classification::single_class(4)), 1.0);
}

}  // namespace
}  // namespace acdaa
