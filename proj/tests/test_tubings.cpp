#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "posetahedra/corpus.hpp"
#include "posetahedra/errors.hpp"
#include "posetahedra/tubings.hpp"

using namespace posetahedra;

namespace {

Tube tube(const Poset& p, std::vector<ElementId> v) { return make_tube(p, v); }

std::vector<std::vector<ElementId>> as_ids(const Poset& p, const std::vector<Tube>& ts) {
  std::vector<std::vector<ElementId>> out;
  for (Tube t : ts) out.push_back(p.ids_of(t));
  return out;
}

bool subset(const Tubing& a, const Tubing& b) {
  return std::all_of(a.begin(), a.end(), [&](Tube t) { return std::find(b.begin(), b.end(), t) != b.end(); });
}

}  // namespace

TEST(EnumerateTubes, W5ProperTubes) {
  Poset w5 = corpus::w5();
  std::vector<std::vector<ElementId>> expected{{1, 2},    {1, 3},    {2, 4},       {3, 4},      {4, 5},      {1, 2, 3},
                                               {2, 3, 4}, {2, 4, 5}, {3, 4, 5}, {1, 2, 3, 4}, {2, 3, 4, 5}};
  EXPECT_EQ(as_ids(w5, enumerate_tubes(w5, true)), expected);
}

TEST(EnumerateTubes, ChainAndTrivialCases) {
  Poset c4 = corpus::chain(4);
  std::vector<std::vector<ElementId>> expected{{1, 2}, {2, 3}, {3, 4}, {1, 2, 3}, {2, 3, 4}};
  EXPECT_EQ(as_ids(c4, enumerate_tubes(c4, true)), expected);
  EXPECT_TRUE(enumerate_tubes(corpus::chain(2), true).empty());
}

TEST(EnumerateTubes, MatchesSubsetScan) {
  for (const auto& e : corpus::desk()) {
    for (bool proper : {false, true}) {
      std::set<std::uint64_t> mine, ref;
      for (Tube t : enumerate_tubes(e.poset, proper)) mine.insert(t.bits());
      for (auto s : oracle::tubes(e.poset, proper)) ref.insert(s);
      EXPECT_EQ(mine, ref) << e.name;
    }
  }
}

TEST(MakeTube, RejectsBadSets) {
  Poset w5 = corpus::w5();
  EXPECT_THROW(tube(w5, {1, 4}), NotATubeError);
  EXPECT_THROW(tube(w5, {2, 3}), NotATubeError);
  EXPECT_THROW(tube(w5, {}), NotATubeError);
  EXPECT_THROW(tube(w5, {9}), NotATubeError);
}

TEST(DGraph, H6TriangleIsACycle) {
  Poset h6 = corpus::h6();
  std::vector<Tube> ts{tube(h6, {1, 2}), tube(h6, {3, 4}), tube(h6, {5, 6})};
  auto adj = d_graph(h6, ts);
  EXPECT_EQ(adj[0], std::vector<std::size_t>{1});
  EXPECT_EQ(adj[1], std::vector<std::size_t>{2});
  EXPECT_EQ(adj[2], std::vector<std::size_t>{0});
}

TEST(DGraph, ChainAndNested) {
  Poset c4 = corpus::chain(4);
  std::vector<Tube> ts{tube(c4, {1, 2}), tube(c4, {3, 4})};
  auto adj = d_graph(c4, ts);
  EXPECT_EQ(adj[0], std::vector<std::size_t>{1});
  EXPECT_TRUE(adj[1].empty());
  std::vector<Tube> nested{tube(c4, {1, 2}), tube(c4, {1, 2, 3})};
  auto none = d_graph(c4, nested);
  EXPECT_TRUE(none[0].empty() && none[1].empty());
}

TEST(IsTubing, H6Certificates) {
  Poset h6 = corpus::h6();
  std::vector<Tube> triple{tube(h6, {1, 2}), tube(h6, {3, 4}), tube(h6, {5, 6})};
  auto check = check_tubing(h6, triple);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.crossing.has_value());
  EXPECT_EQ(check.cycle, triple);
  std::vector<Tube> pair{triple[0], triple[1]};
  EXPECT_TRUE(is_tubing(h6, pair));
  EXPECT_TRUE(is_tubing(h6, std::vector<Tube>{}));
  EXPECT_THROW(make_tubing(h6, triple), NotATubingError);
}

TEST(IsTubing, CrossingPairCertificate) {
  Poset c4 = corpus::chain(4);
  std::vector<Tube> ts{tube(c4, {1, 2}), tube(c4, {2, 3})};
  auto check = check_tubing(c4, ts);
  ASSERT_TRUE(check.crossing.has_value());
  EXPECT_EQ(check.crossing->first, ts[0]);
}

TEST(EnumerateTubings, MaximalCounts) {
  EXPECT_EQ(enumerate_proper_tubings(corpus::chain(4), true).size(), 5u);
  EXPECT_EQ(enumerate_proper_tubings(corpus::claw(3), true).size(), 6u);
  EXPECT_EQ(enumerate_proper_tubings(corpus::n4(), true).size(), 5u);
  EXPECT_EQ(enumerate_tubes(corpus::n4(), true).size(), 5u);
  auto c2 = enumerate_proper_tubings(corpus::chain(2), false);
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_TRUE(c2.front().empty());
}

TEST(EnumerateTubings, MatchesSubsetScanBySize) {
  for (const auto& e : corpus::desk()) {
    if (oracle::tubes(e.poset, true).size() > 16) continue;
    std::map<std::size_t, std::size_t> mine;
    for (const auto& t : enumerate_proper_tubings(e.poset, false)) ++mine[t.size()];
    EXPECT_EQ(mine, oracle::tubing_counts(e.poset)) << e.name;
  }
}

TEST(EnumerateTubings, ClosedUnderSubsetsAndSizeBound) {
  for (const auto& e : corpus::desk()) {
    if (e.poset.size() > 7) continue;
    auto all = enumerate_proper_tubings(e.poset, false);
    std::set<Tubing> faces(all.begin(), all.end());
    auto maximal = enumerate_proper_tubings(e.poset, true);
    for (const auto& t : all) {
      EXPECT_LE(t.size() + 2, e.poset.size());
      for (std::size_t drop = 0; drop < t.size(); ++drop) {
        Tubing sub = t;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        EXPECT_TRUE(faces.count(sub)) << e.name;
      }
      bool is_max = t.size() + 2 == e.poset.size();
      EXPECT_EQ(is_max, std::find(maximal.begin(), maximal.end(), t) != maximal.end());
    }
  }
}

TEST(TubingTree, ChainExample) {
  Poset c4 = corpus::chain(4);
  Tubing t = make_tubing(c4, {tube(c4, {1, 2}), tube(c4, {1, 2, 3})});
  TubingTree tree(c4, t);
  EXPECT_EQ(tree.children(c4.all()), (std::vector<Tube>{tube(c4, {4}), tube(c4, {1, 2, 3})}));
  EXPECT_EQ(tree.children(tube(c4, {1, 2, 3})), (std::vector<Tube>{tube(c4, {3}), tube(c4, {1, 2})}));
  EXPECT_EQ(tree.children(tube(c4, {1, 2})), (std::vector<Tube>{tube(c4, {1}), tube(c4, {2})}));
  EXPECT_EQ(tree.parent(tube(c4, {1, 2})), tube(c4, {1, 2, 3}));
  EXPECT_EQ(tree.smallest_containing(tube(c4, {2, 3})), tube(c4, {1, 2, 3}));
}

TEST(TubingTree, StarAndW5) {
  Poset w5 = corpus::w5();
  TubingTree star(w5, {});
  EXPECT_EQ(star.children(w5.all()).size(), 5u);
  TubingTree tree(w5, make_tubing(w5, {tube(w5, {1, 2, 3}), tube(w5, {4, 5})}));
  EXPECT_EQ(tree.children(w5.all()), (std::vector<Tube>{tube(w5, {4, 5}), tube(w5, {1, 2, 3})}));
}

TEST(PlaneTrees, Examples) {
  Poset c3 = corpus::chain(3);
  PlaneTree leaf;
  PlaneTree left{{PlaneTree{{leaf, leaf}}, leaf}};
  EXPECT_EQ(tubing_from_plane_tree(c3, left), (Tubing{tube(c3, {1, 2})}));
  PlaneTree corolla{{leaf, leaf, leaf}};
  EXPECT_TRUE(tubing_from_plane_tree(c3, corolla).empty());
  Poset c4 = corpus::chain(4);
  PlaneTree binary{{PlaneTree{{PlaneTree{{leaf, leaf}}, leaf}}, leaf}};
  EXPECT_EQ(tubing_from_plane_tree(c4, binary), (Tubing{tube(c4, {1, 2}), tube(c4, {1, 2, 3})}));
}

TEST(PlaneTrees, MalformedTreesAreRejected) {
  Poset c3 = corpus::chain(3);
  PlaneTree leaf;
  PlaneTree unary{{PlaneTree{{leaf, leaf, leaf}}}};
  EXPECT_THROW(tubing_from_plane_tree(c3, unary), MalformedTreeError);
  PlaneTree too_few{{leaf, leaf}};
  EXPECT_THROW(tubing_from_plane_tree(c3, too_few), MalformedTreeError);
}

TEST(PlaneTrees, BijectionOntoChainTubings) {
  // Little Schroeder numbers count plane trees with n leaves.
  const std::vector<std::size_t> schroeder{1, 1, 3, 11, 45, 197};
  for (std::size_t n = 2; n <= 6; ++n) {
    Poset chain = corpus::chain(n);
    auto trees = enumerate_plane_trees(n);
    EXPECT_EQ(trees.size(), schroeder[n - 1]);
    std::set<Tubing> images;
    for (const auto& t : trees) images.insert(tubing_from_plane_tree(chain, t));
    EXPECT_EQ(images.size(), trees.size());
    auto tubings = enumerate_proper_tubings(chain, false);
    EXPECT_EQ(images, std::set<Tubing>(tubings.begin(), tubings.end()));
  }
}

TEST(OrderedSetPartitions, Examples) {
  Poset k3 = corpus::claw(3);
  EXPECT_EQ(tubing_from_ordered_set_partition(k3, {{1}, {2}, {3}}),
            (Tubing{tube(k3, {0, 1}), tube(k3, {0, 1, 2})}));
  EXPECT_TRUE(tubing_from_ordered_set_partition(k3, {{1, 2, 3}}).empty());
  EXPECT_EQ(tubing_from_ordered_set_partition(k3, {{2}, {1, 3}}), (Tubing{tube(k3, {0, 2})}));
  EXPECT_THROW(tubing_from_ordered_set_partition(k3, {{1}, {1, 2, 3}}), NotAPartitionError);
  EXPECT_THROW(tubing_from_ordered_set_partition(k3, {{1}, {2}}), NotAPartitionError);
  EXPECT_THROW(tubing_from_ordered_set_partition(k3, {{1, 2, 3}, {}}), NotAPartitionError);
}

TEST(OrderedSetPartitions, OrderPreservingBijection) {
  // Fubini numbers count ordered set partitions.
  const std::vector<std::size_t> fubini{1, 3, 13, 75, 541};
  for (std::size_t n = 2; n <= 5; ++n) {
    Poset claw = corpus::claw(n);
    auto partitions = enumerate_ordered_set_partitions(n);
    EXPECT_EQ(partitions.size(), fubini[n - 1]);
    std::vector<Tubing> images;
    for (const auto& b : partitions) images.push_back(tubing_from_ordered_set_partition(claw, b));
    std::set<Tubing> distinct(images.begin(), images.end());
    EXPECT_EQ(distinct.size(), images.size());
    auto tubings = enumerate_proper_tubings(claw, false);
    EXPECT_EQ(distinct, std::set<Tubing>(tubings.begin(), tubings.end()));
    if (n > 4) continue;
    // Refinement: every block of the coarse partition is a union of
    // consecutive fine blocks.
    auto refines = [](const auto& fine, const auto& coarse) {
      std::size_t k = 0;
      for (const auto& block : coarse) {
        std::set<ElementId> want(block.begin(), block.end()), got;
        while (k < fine.size() && got.size() < want.size()) {
          got.insert(fine[k].begin(), fine[k].end());
          ++k;
        }
        if (got != want) return false;
      }
      return k == fine.size();
    };
    for (std::size_t a = 0; a < partitions.size(); ++a)
      for (std::size_t b = 0; b < partitions.size(); ++b)
        EXPECT_EQ(refines(partitions[a], partitions[b]), subset(images[b], images[a]));
  }
}
