#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "acdaa/daa.hpp"
#include "acdaa/ensemble.hpp"
#include "acdaa/errors.hpp"
#include "support.hpp"

namespace acdaa {
namespace {

Classification of(std::vector<VertexSet> classes, std::size_t n) {
  return Classification(std::move(classes), n);
}

std::size_t edges_between(const FrequencyGraph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    const bool ua = std::binary_search(a.begin(), a.end(), e.u);
    const bool va = std::binary_search(a.begin(), a.end(), e.v);
    const bool ub = std::binary_search(b.begin(), b.end(), e.u);
    const bool vb = std::binary_search(b.begin(), b.end(), e.v);
    if ((ua && vb) || (ub && va)) ++count;
  }
  return count;
}

// The class of `finer` that is not a class of `coarser`, checking that
// exactly two classes of finer merge into one of coarser.
void expect_single_merge(const Classification& finer, const Classification& coarser,
                         const FrequencyGraph& g) {
  ASSERT_EQ(finer.num_classes(), coarser.num_classes() + 1);
  std::vector<VertexSet> gone;
  for (const auto& cls : finer.classes()) {
    if (std::find(coarser.classes().begin(), coarser.classes().end(), cls) == coarser.classes().end()) {
      gone.push_back(cls);
    }
  }
  ASSERT_EQ(gone.size(), 2u);
  VertexSet merged = gone[0];
  merged.insert(merged.end(), gone[1].begin(), gone[1].end());
  std::sort(merged.begin(), merged.end());
  EXPECT_NE(std::find(coarser.classes().begin(), coarser.classes().end(), merged),
            coarser.classes().end());
  // The merged pair has the largest edge count among all pairs.
  const std::size_t chosen = edges_between(g, gone[0], gone[1]);
  for (std::size_t a = 0; a < finer.num_classes(); ++a) {
    for (std::size_t b = a + 1; b < finer.num_classes(); ++b) {
      EXPECT_LE(edges_between(g, finer[a], finer[b]), chosen);
    }
  }
}

TEST(SelectClass, Examples) {
  std::vector<VertexSet> classes{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {10, 11, 12}, {13, 14, 15}};
  EXPECT_EQ(select_class_to_split(of(classes, 16)), 0u);
  EXPECT_EQ(select_class_to_split(of({{0, 2, 4}, {1, 3, 5, 6}}, 7)), 1u);
  EXPECT_EQ(select_class_to_split(of({{5, 6, 7, 8, 9}, {0, 1, 2, 3, 4}}, 10)), 0u);
  EXPECT_EQ(select_class_to_split(Classification::single_class(3)), 0u);
}

TEST(Agglomerate, HandExample) {
  // Classes {0,1,2}, {3,4,5}, {6,7,8} with 5, 2 and 1 edges between them.
  const auto g = testing::graph_from(
      9, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 5}, {0, 6}, {1, 7}, {3, 6}});
  const auto chain = agglomerate_chain(of({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}, 9), g);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0], of({{0, 1, 2, 3, 4, 5}, {6, 7, 8}}, 9));
}

TEST(Agglomerate, EqualCountsMergeFirstPair) {
  const auto g = testing::graph_from(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto chain = agglomerate_chain(of({{0}, {1}, {2}}, 3), g);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0], of({{0, 1}, {2}}, 3));
}

TEST(Agglomerate, ShortChains) {
  const auto g = testing::complete_graph(4);
  EXPECT_TRUE(agglomerate_chain(of({{0, 1}, {2, 3}}, 4), g).empty());
  EXPECT_TRUE(agglomerate_chain(Classification::single_class(4), g).empty());
  const auto chain = agglomerate_chain(of({{0}, {1}, {2}, {3}}, 4), g);
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain[0].num_classes(), 3u);
  EXPECT_EQ(chain[1].num_classes(), 2u);
}

TEST(Splice, Examples) {
  const Cut halves{{0, 1, 2}, {3, 4, 5}, {}};
  EXPECT_EQ(splice_dichotomy(Classification::single_class(6), 0, halves),
            of({{0, 1, 2}, {3, 4, 5}}, 6));

  const auto two = of({{0, 1}, {2, 3, 4, 5}}, 6);
  const auto three = splice_dichotomy(two, 1, Cut{{2, 5}, {3, 4}, {}});
  EXPECT_EQ(three, of({{0, 1}, {2, 5}, {3, 4}}, 6));

  // Canonical order regardless of which part was first.
  EXPECT_EQ(splice_dichotomy(two, 1, Cut{{3, 4}, {2, 5}, {}}), three);
}

TEST(Splice, RejectsForeignCut) {
  const auto two = of({{0, 1}, {2, 3, 4, 5}}, 6);
  EXPECT_THROW(splice_dichotomy(two, 1, Cut{{1, 2}, {3, 4, 5}, {}}), InvalidInput);
  EXPECT_THROW(splice_dichotomy(two, 1, Cut{{2}, {3, 4}, {}}), InvalidInput);
  EXPECT_THROW(splice_dichotomy(two, 2, Cut{{0}, {1}, {}}), InvalidInput);
}

TEST(FamilySize, Law) {
  EXPECT_EQ(family_size(1), 1u);
  EXPECT_EQ(family_size(3), 6u);
  EXPECT_EQ(family_size(10), 55u);
}

class RunDaaFixture : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 gen(31);
    d_ = testing::random_points_matrix(60, gen);
    g_ = prepare_graph(d_);
  }
  DissimilarityMatrix d_;
  FrequencyGraph g_;
};

TEST_F(RunDaaFixture, SingleDichotomy) {
  Rng rng(1);
  const auto f = run_daa(g_, d_, 1, 200, rng);
  ASSERT_EQ(f.entries.size(), 1u);
  EXPECT_EQ(f.entries[0].kind, EntryKind::essential);
  EXPECT_EQ(f.entries[0].classification.num_classes(), 2u);
}

TEST_F(RunDaaFixture, OrderAndTags) {
  Rng rng(2);
  const auto f = run_daa(g_, d_, 3, 200, rng);
  const std::vector<std::pair<int, int>> expected{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {4, 4}};
  ASSERT_EQ(f.entries.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& e = f.entries[i];
    EXPECT_EQ(e.level, expected[i].first);
    EXPECT_EQ(e.size, expected[i].second);
    EXPECT_EQ(static_cast<int>(e.classification.num_classes()), e.size);
    EXPECT_EQ(e.kind, e.size == e.level ? EntryKind::essential : EntryKind::adjoint);
  }
  EXPECT_FALSE(f.padded);
}

TEST_F(RunDaaFixture, StructuralInvariants) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Rng rng(seed);
    const int k = 6;
    const auto f = run_daa(g_, d_, k, 150, rng);
    ASSERT_EQ(f.entries.size(), family_size(k));

    std::vector<Classification> essentials;
    for (const auto& e : f.entries) {
      EXPECT_EQ(e.classification.object_count(), d_.size());
      if (e.kind == EntryKind::essential) essentials.push_back(e.classification);
    }
    ASSERT_EQ(essentials.size(), static_cast<std::size_t>(k));

    // Each essential step splits exactly the largest class of the previous one.
    auto prev = Classification::single_class(d_.size());
    for (const auto& next : essentials) {
      const auto split = prev[select_class_to_split(prev)];
      std::size_t kept = 0;
      for (const auto& cls : prev.classes()) {
        if (std::find(next.classes().begin(), next.classes().end(), cls) != next.classes().end()) ++kept;
      }
      EXPECT_EQ(kept, prev.num_classes() - 1);
      EXPECT_EQ(std::find(next.classes().begin(), next.classes().end(), split), next.classes().end());
      prev = next;
    }

    // Adjoint entries form the agglomeration chain of their essential entry.
    std::size_t pos = 0;
    for (int level = 2; level <= k + 1; ++level) {
      const auto& essential = f.entries[pos + static_cast<std::size_t>(level) - 2].classification;
      auto finer = essential;
      for (int size = level - 1; size >= 2; --size) {
        const auto& coarser = f.entries[pos + static_cast<std::size_t>(size) - 2].classification;
        expect_single_merge(finer, coarser, g_);
        finer = coarser;
      }
      pos += static_cast<std::size_t>(level) - 1;
    }
  }
}

TEST(RunDaa, PadsWhenNothingToSplit) {
  const auto d = points_to_dissimilarity(PointSet(1, {0, 1, 3}));
  const auto g = prepare_graph(d);
  Rng rng(0);
  const auto f = run_daa(g, d, 4, 50, rng);
  EXPECT_TRUE(f.padded);
  ASSERT_EQ(f.entries.size(), family_size(4));
  const auto singletons = of({{0}, {1}, {2}}, 3);
  EXPECT_EQ(f.entries.back().classification, singletons);
  EXPECT_EQ(f.entries.back().level, 5);
}

TEST(RunDaa, Errors) {
  const auto d = points_to_dissimilarity(PointSet(1, {0, 1, 2, 3}));
  Rng rng(0);
  const auto split = testing::graph_from(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(run_daa(split, d, 1, 10, rng), InvalidInput);
  const auto g = prepare_graph(d);
  EXPECT_THROW(run_daa(g, d, 0, 10, rng), InvalidInput);
  EXPECT_THROW(run_daa(g, d, 1, 0, rng), InvalidInput);
}

TEST(RunDaa, TruncateIsPrefix) {
  std::mt19937_64 gen(8);
  const auto d = testing::random_points_matrix(40, gen);
  const auto g = prepare_graph(d);
  Rng rng(4);
  const auto f = run_daa(g, d, 5, 100, rng);
  const auto t = truncate_family(f, 3);
  ASSERT_EQ(t.entries.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(t.entries[i].classification, f.entries[i].classification);
  EXPECT_THROW(truncate_family(f, 6), InvalidInput);
}

}  // namespace
}  // namespace acdaa
