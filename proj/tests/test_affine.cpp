#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "posetahedra/affine.hpp"
#include "posetahedra/errors.hpp"

using namespace posetahedra;

using FVec = std::vector<std::int64_t>;

namespace {

/// Relation on a finite window [lo, hi] from the generators by plain
/// transitive closure; deliberately ignores the library's distance matrix.
struct WindowOrder {
  std::int64_t lo, hi;
  std::vector<std::vector<bool>> less;

  WindowOrder(std::size_t n, const std::vector<IdPair>& gens, std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
    const auto p = static_cast<std::int64_t>(n);
    const std::size_t size = static_cast<std::size_t>(hi - lo + 1);
    less.assign(size, std::vector<bool>(size, false));
    auto mark = [&](std::int64_t i, std::int64_t j) {
      if (i >= lo && i <= hi && j >= lo && j <= hi) less[idx(i)][idx(j)] = true;
    };
    for (std::int64_t d = (lo - 3 * p) / p - 1; d <= (hi + 3 * p) / p + 1; ++d) {
      for (const auto& [i, j] : gens) mark(i + d * p, j + d * p);
    }
    for (std::int64_t i = lo; i + p <= hi; ++i) mark(i, i + p);
    for (std::size_t k = 0; k < size; ++k)
      for (std::size_t i = 0; i < size; ++i)
        if (less[i][k])
          for (std::size_t j = 0; j < size; ++j)
            if (less[k][j]) less[i][j] = true;
  }
  std::size_t idx(std::int64_t i) const { return static_cast<std::size_t>(i - lo); }
  bool lt(std::int64_t i, std::int64_t j) const { return less[idx(i)][idx(j)]; }
};

/// Tube classes by brute force over subsets of a window.
std::set<AffineTube> brute_tubes(std::size_t n, const std::vector<IdPair>& gens, std::int64_t width) {
  const auto p = static_cast<std::int64_t>(n);
  WindowOrder w(n, gens, -4 * p - width, 5 * p + 2 * width);
  std::set<AffineTube> out;
  for (std::int64_t m = 1; m <= p; ++m) {
    std::vector<std::int64_t> rest;
    for (std::int64_t x = m + 1; x <= m + width; ++x) rest.push_back(x);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
      AffineTube t{m};
      for (std::size_t k = 0; k < rest.size(); ++k)
        if ((mask >> k) & 1U) t.push_back(rest[k]);
      std::set<std::int64_t> res;
      for (auto x : t) res.insert(((x - 1) % p + p) % p);
      if (res.size() != t.size()) continue;
      bool convex = true;
      for (auto i : t)
        for (auto k : t)
          for (std::int64_t j = w.lo; j <= w.hi && convex; ++j)
            if (w.lt(i, j) && w.lt(j, k) && std::find(t.begin(), t.end(), j) == t.end()) convex = false;
      if (!convex) continue;
      std::set<std::int64_t> seen{t.front()};
      for (bool grew = true; grew;) {
        grew = false;
        for (auto x : t)
          for (auto y : t)
            if (seen.count(x) && !seen.count(y) && (w.lt(x, y) || w.lt(y, x))) seen.insert(y), grew = true;
      }
      if (seen.size() == t.size()) out.insert(t);
    }
  }
  return out;
}

/// Tubing test on explicit translates: pairwise nested or disjoint, and the
/// disjointness digraph on translates in a window has no directed cycle.
bool window_tubing(std::size_t n, const std::vector<IdPair>& gens, const std::vector<AffineTube>& classes, int shifts) {
  const auto p = static_cast<std::int64_t>(n);
  std::int64_t span = 0;
  for (const auto& t : classes) span = std::max(span, t.back());
  WindowOrder w(n, gens, -(shifts + 2) * p - span, (shifts + 2) * p + 2 * span);
  std::vector<std::set<std::int64_t>> all;
  for (const auto& t : classes) {
    for (int d = -shifts; d <= shifts; ++d) {
      std::set<std::int64_t> s;
      for (auto x : t) s.insert(x + d * p);
      all.push_back(s);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) return false;
      bool meet = false, ij = true, ji = true;
      for (auto x : all[i]) (all[j].count(x) ? meet = true : ij = false);
      for (auto x : all[j]) ji = ji && all[i].count(x);
      if (meet && !ij && !ji) return false;
    }
  const std::size_t k = all.size();
  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      bool disjoint = true, related = false;
      for (auto x : all[i]) {
        if (all[j].count(x)) disjoint = false;
        for (auto y : all[j]) related = related || w.lt(x, y);
      }
      if (disjoint && related) adj[i].push_back(j);
    }
  std::vector<int> state(k, 0);
  std::function<bool(std::size_t)> cyclic = [&](std::size_t u) {
    state[u] = 1;
    for (auto v : adj[u])
      if (state[v] == 1 || (state[v] == 0 && cyclic(v))) return true;
    state[u] = 2;
    return false;
  };
  for (std::size_t u = 0; u < k; ++u)
    if (state[u] == 0 && cyclic(u)) return false;
  return true;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t factorial(std::int64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<IdPair> chain_gens(std::size_t n) {
  std::vector<IdPair> g;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k) g.emplace_back(k, k + 1);
  return g;
}

std::vector<IdPair> claw_gens(std::size_t n) {
  std::vector<IdPair> g;
  const auto m = static_cast<std::int64_t>(n);
  for (std::int64_t k = 1; k < m; ++k) g.push_back({m, m + k}), g.push_back({k, m});
  return g;
}

/// Three covers between pairs closing a cycle, made periodic.
std::vector<IdPair> h6_gens() { return {{1, 2}, {3, 4}, {5, 6}, {1, 4}, {3, 6}, {5, 2}, {2, 7}, {4, 9}, {6, 11}}; }

/// A less symmetric example of period 3.
std::vector<IdPair> skew_gens() { return {{1, 2}, {1, 3}, {2, 4}, {3, 5}}; }

}  // namespace

TEST(AffinePoset, Examples) {
  EXPECT_NO_THROW(AffinePoset::build(3, {{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_NO_THROW(corpus::circular_claw(3));
  EXPECT_THROW(AffinePoset::build(4, {{1, 3}, {3, 5}, {2, 4}, {4, 6}}), NotStronglyConnectedError);
  EXPECT_THROW(AffinePoset::build(2, {{1, 2}, {2, 1}}), CycleError);
  EXPECT_THROW(AffinePoset::build(2, {{1, 4}, {2, 0}}), CycleError);
  EXPECT_THROW(AffinePoset::build(2, {{3, 4}}), PreconditionError);
  EXPECT_THROW(AffinePoset::build(0, {}), PreconditionError);
  EXPECT_NO_THROW(AffinePoset::build(1, {}));
}

TEST(AffinePoset, RelationMatchesWindowClosure) {
  for (auto [n, gens] : std::vector<std::pair<std::size_t, std::vector<IdPair>>>{
           {3, chain_gens(3)}, {4, claw_gens(4)}, {3, skew_gens()}, {2, {{1, 4}, {2, 3}}}}) {
    AffinePoset a = AffinePoset::build(n, gens);
    const auto p = static_cast<std::int64_t>(n);
    WindowOrder w(n, gens, -6 * p, 9 * p);
    for (std::int64_t i = -p; i <= 2 * p; ++i)
      for (std::int64_t j = -p; j <= 3 * p; ++j) {
        EXPECT_EQ(a.less(i, j), w.lt(i, j)) << i << " " << j;
        EXPECT_EQ(a.less(i, j), a.less(i + p, j + p));
      }
  }
}

TEST(AffinePoset, Covers) {
  EXPECT_EQ(corpus::circular_chain(3).cover_ids(), (std::vector<IdPair>{{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(corpus::circular_claw(3).cover_ids(), (std::vector<IdPair>{{1, 3}, {2, 3}, {3, 4}, {3, 5}}));
  EXPECT_EQ(corpus::circular_claw(3).hasse_neighbors(3), (std::vector<ElementId>{1, 2, 4, 5}));
  // 1 < 4 is implied by 1 < 2 < 4 and is not a cover.
  EXPECT_EQ(AffinePoset::build(2, {{1, 4}, {1, 2}, {2, 3}}).cover_ids(), (std::vector<IdPair>{{1, 2}, {2, 3}}));
}

TEST(LinearExtension, Examples) {
  auto cc3 = linear_extension(corpus::circular_chain(3));
  EXPECT_EQ(cc3.window, (std::vector<ElementId>{1, 2, 3}));
  EXPECT_EQ(extension_window(corpus::circular_chain(3)), (std::vector<ElementId>{0, 1, 2}));
  auto one = linear_extension(corpus::circular_chain(1));
  for (ElementId i = -3; i <= 3; ++i) EXPECT_EQ(one(i), i);
  auto ck3 = linear_extension(corpus::circular_claw(3));
  EXPECT_EQ(ck3(3) + 3, ck3(6));
}

TEST(LinearExtension, IsPeriodicAndStrict) {
  for (auto [n, gens] : std::vector<std::pair<std::size_t, std::vector<IdPair>>>{
           {3, chain_gens(3)}, {4, claw_gens(4)}, {3, skew_gens()}, {5, claw_gens(5)}}) {
    AffinePoset a = AffinePoset::build(n, gens);
    auto phi = linear_extension(a);
    const auto p = static_cast<std::int64_t>(n);
    WindowOrder w(n, gens, -6 * p, 9 * p);
    for (std::int64_t i = -2 * p; i <= 3 * p; ++i) {
      EXPECT_EQ(phi(i + p), phi(i) + p);
      for (std::int64_t j = -2 * p; j <= 3 * p; ++j)
        if (w.lt(i, j)) EXPECT_LT(phi(i), phi(j));
    }
    std::set<std::int64_t> values;
    for (std::int64_t i = 1; i <= p; ++i) values.insert(((phi(i) % p) + p) % p);
    EXPECT_EQ(values.size(), n);
  }
}

TEST(AffineTubes, CountsAndExamples) {
  auto cc3 = enumerate_affine_tubes(corpus::circular_chain(3), true);
  EXPECT_EQ(cc3, (std::vector<AffineTube>{{1, 2}, {2, 3}, {3, 4}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}}));
  EXPECT_EQ(enumerate_affine_tubes(corpus::circular_claw(3), true).size(), 8u);
  EXPECT_TRUE(enumerate_affine_tubes(corpus::circular_chain(1), true).empty());
  EXPECT_EQ(enumerate_affine_tubes(corpus::circular_chain(1), false), (std::vector<AffineTube>{{1}}));
  EXPECT_EQ(make_affine_tube(corpus::circular_chain(3), {6, 7}), (AffineTube{3, 4}));
  EXPECT_THROW(make_affine_tube(corpus::circular_chain(3), {1, 3}), NotATubeError);
  EXPECT_THROW(make_affine_tube(corpus::circular_chain(3), {1, 2, 3, 4}), NotATubeError);
}

TEST(AffineTubes, MatchBruteForceWindow) {
  for (auto [n, gens] : std::vector<std::pair<std::size_t, std::vector<IdPair>>>{{2, chain_gens(2)},
                                                                                {3, chain_gens(3)},
                                                                                {4, chain_gens(4)},
                                                                                {3, claw_gens(3)},
                                                                                {4, claw_gens(4)},
                                                                                {3, skew_gens()},
                                                                                {2, {{1, 4}, {2, 3}}}}) {
    AffinePoset a = AffinePoset::build(n, gens);
    auto got = enumerate_affine_tubes(a, false);
    // A wider window than the library's bound.
    auto want = brute_tubes(n, gens, static_cast<std::int64_t>(2 * n + 2));
    EXPECT_EQ(std::set<AffineTube>(got.begin(), got.end()), want) << n;
  }
}

TEST(AffineTubings, MatchWindowOracle) {
  for (auto [n, gens] : std::vector<std::pair<std::size_t, std::vector<IdPair>>>{
           {3, chain_gens(3)}, {3, claw_gens(3)}, {4, chain_gens(4)}, {4, claw_gens(4)}, {3, skew_gens()}}) {
    AffinePoset a = AffinePoset::build(n, gens);
    auto tubes = enumerate_affine_tubes(a, false);
    for (std::size_t i = 0; i < tubes.size(); ++i)
      for (std::size_t j = i; j < tubes.size(); ++j)
        for (std::size_t k = j; k < tubes.size(); ++k) {
          std::vector<AffineTube> t{tubes[i]};
          if (j != i) t.push_back(tubes[j]);
          if (k != j) t.push_back(tubes[k]);
          ASSERT_EQ(is_affine_tubing(a, t), window_tubing(n, gens, t, 4))
              << format_tube(tubes[i]) << format_tube(tubes[j]) << format_tube(tubes[k]);
        }
  }
}

TEST(AffineTubings, PeriodicH6HasACycle) {
  AffinePoset a = AffinePoset::build(6, h6_gens());
  std::vector<AffineTube> pairs{{1, 2}, {3, 4}, {5, 6}};
  for (const auto& t : pairs) EXPECT_TRUE(is_affine_tube(a, t));
  EXPECT_TRUE(is_affine_tubing(a, {pairs[0], pairs[1]}));
  EXPECT_TRUE(is_affine_tubing(a, {pairs[1], pairs[2]}));
  EXPECT_TRUE(is_affine_tubing(a, {pairs[0], pairs[2]}));
  auto check = check_affine_tubing(a, pairs);
  EXPECT_FALSE(check.ok);
  EXPECT_TRUE(check.cyclic);
  EXPECT_FALSE(window_tubing(6, h6_gens(), pairs, 3));
  auto tubes = enumerate_affine_tubes(a, true);
  for (std::size_t i = 0; i < tubes.size(); ++i)
    for (std::size_t j = i + 1; j < tubes.size(); ++j) {
      std::vector<AffineTube> t{tubes[i], tubes[j]};
      ASSERT_EQ(is_affine_tubing(a, t), window_tubing(6, h6_gens(), t, 3));
  }
}

TEST(AffineTubings, SmallCases) {
  AffinePoset cc3 = corpus::circular_chain(3);
  EXPECT_TRUE(is_affine_tubing(cc3, {{1}, {2}, {3}}));
  EXPECT_FALSE(is_affine_tubing(cc3, {{1, 2}, {2, 3}}));
  EXPECT_THROW(make_affine_tubing(cc3, {{1, 2}, {4, 5}}), NotATubingError);
  EXPECT_TRUE(is_affine_tubing(cc3, {{1, 2}, {1, 2, 3}}));
}

TEST(Cyclohedron, FVectors) {
  EXPECT_EQ(f_vector(cyclohedron_face_lattice(corpus::circular_chain(3))), (FVec{6, 6, 1}));
  EXPECT_EQ(f_vector(cyclohedron_face_lattice(corpus::circular_claw(3))), (FVec{8, 8, 1}));
  EXPECT_EQ(f_vector(cyclohedron_face_lattice(corpus::circular_chain(2))), (FVec{2, 1}));
  EXPECT_EQ(f_vector(cyclohedron_face_lattice(corpus::circular_chain(1))), (FVec{1}));
}

TEST(Cyclohedron, VertexCounts) {
  for (std::int64_t n = 2; n <= 5; ++n) {
    auto f = f_vector(cyclohedron_face_lattice(corpus::circular_chain(static_cast<std::size_t>(n))));
    EXPECT_EQ(f.front(), binomial(2 * (n - 1), n - 1)) << n;
    EXPECT_EQ(f[f.size() - 2], n * (n - 1)) << n;
  }
  for (std::int64_t n = 2; n <= 4; ++n) {
    auto f = f_vector(cyclohedron_face_lattice(corpus::circular_claw(static_cast<std::size_t>(n))));
    EXPECT_EQ(f.front(), (std::int64_t{1} << (n - 1)) * factorial(n - 1)) << n;
  }
}

TEST(Cyclohedron, EulerAndSimplicity) {
  for (auto a : {corpus::circular_chain(3), corpus::circular_chain(4), corpus::circular_claw(3),
                 corpus::circular_claw(4), AffinePoset::build(3, skew_gens())}) {
    auto lattice = cyclohedron_face_lattice(a);
    EXPECT_EQ(euler_sum(lattice), 0);
    EXPECT_TRUE(is_simple(lattice));
  }
}

TEST(Cyclohedron, ClawFacesAreSignedPairChains) {
  // Faces of the type B permutohedron: chains K1+ < ... < Kr+ < [n-1] - Kr- <
  // ... < [n-1] - K1- of disjoint signed pairs.
  for (std::size_t n = 2; n <= 4; ++n) {
    AffinePoset claw = corpus::circular_claw(n);
    const std::size_t m = n - 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t p = 0; p < (1U << m); ++p)
      for (std::uint64_t q = 0; q < (1U << m); ++q)
        if (!(p & q) && (p | q)) pairs.emplace_back(p, q);
    auto members = [&](std::uint64_t s) {
      std::vector<ElementId> out;
      for (std::size_t k = 0; k < m; ++k)
        if ((s >> k) & 1U) out.push_back(static_cast<ElementId>(k) + 1);
      return out;
    };
    auto subset = [](std::uint64_t x, std::uint64_t y) { return (x & ~y) == 0; };
    std::set<std::set<AffineTube>> want;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chain;
    std::function<void()> extend = [&]() {
      std::set<AffineTube> tubing;
      for (auto [p, q] : chain)
        tubing.insert(canonical_representative(claw, tube_from_signed_pair(claw, members(p), members(q))));
      want.insert(tubing);
      for (auto y : pairs) {
        if (!chain.empty()) {
          auto x = chain.back();
          if (x == y || !subset(x.first, y.first) || !subset(x.second, y.second)) continue;
        }
        chain.push_back(y);
        extend();
        chain.pop_back();
      }
    };
    extend();
    std::set<std::set<AffineTube>> got;
    for (const auto& t : enumerate_proper_affine_tubings(claw, false)) got.insert(std::set<AffineTube>(t.begin(), t.end()));
    EXPECT_EQ(got, want) << n;
  }
}

TEST(Cyclohedron, ChainFacesAreCyclicIntervalTubings) {
  // Tubes of the circular chain are cyclic intervals; a tubing is a family of
  // pairwise nested or disjoint intervals on the circle (translates included)
  // that does not wrap all the way around through disjoint pieces.
  for (std::size_t n = 2; n <= 5; ++n) {
    AffinePoset a = corpus::circular_chain(n);
    auto tubes = enumerate_affine_tubes(a, true);
    for (const auto& t : tubes) {
      for (std::size_t k = 1; k < t.size(); ++k) EXPECT_EQ(t[k], t[k - 1] + 1);
    }
    EXPECT_EQ(tubes.size(), n * (n - 1));
    for (const auto& tubing : enumerate_proper_affine_tubings(a, false)) {
      EXPECT_TRUE(window_tubing(n, chain_gens(n), tubing, 3));
    }
  }
}

TEST(AffineOrderPolytope, SegmentAndPolygons) {
  auto seg = affine_order_polytope(corpus::circular_chain(2));
  EXPECT_EQ(seg.dim(), 1u);
  ASSERT_EQ(seg.vertices.size(), 2u);
  std::set<FaceLabel> labels(seg.vertex_labels.begin(), seg.vertex_labels.end());
  EXPECT_EQ(labels, (std::set<FaceLabel>{{{1, 2}}, {{2, 3}}}));
  auto ck3 = affine_order_polytope(corpus::circular_claw(3));
  std::size_t maximal = 0;
  for (const auto& t : enumerate_affine_tubes(corpus::circular_claw(3), true)) maximal += t.size() == 3 ? 1 : 0;
  EXPECT_EQ(ck3.dim(), 2u);
  EXPECT_EQ(ck3.vertices.size(), maximal);
  EXPECT_EQ(ck3.facets.size(), 4u);
}

TEST(AffineOrderPolytope, VerticesSolveTheirTightCovers) {
  for (auto a : {corpus::circular_chain(4), corpus::circular_claw(4), AffinePoset::build(3, skew_gens())}) {
    for (Rational c : {Rational(1), Rational(5, 2)}) {
      auto q = affine_order_polytope(a, c);
      const auto n = static_cast<std::int64_t>(a.order());
      for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        auto x = q.chart.to_ambient(q.vertices[v]);
        EXPECT_EQ(sum(x), 0);
        auto lift = [&](ElementId i) { return x[a.residue(i)] + c * a.level(i); };
        const AffineTube& tau = q.vertex_labels[v].front();
        for (ElementId i : tau) EXPECT_EQ(lift(i), lift(tau.front()));
        for (ElementId i = 1; i <= n; ++i)
          for (ElementId j = i - 2 * n; j <= i + 3 * n; ++j)
            if (a.less(i, j)) EXPECT_LE(lift(i), lift(j));
      }
    }
  }
}

TEST(AffineOrderPolytope, LinearExtensionIsInterior) {
  for (auto a : {corpus::circular_chain(3), corpus::circular_claw(4), AffinePoset::build(3, skew_gens())}) {
    auto q = affine_order_polytope(a);
    auto phi = linear_extension(a);
    const std::size_t n = a.order();
    RationalVector x(n);
    Rational mean(0);
    for (std::size_t r = 0; r < n; ++r) {
      x[r] = Rational(phi(static_cast<ElementId>(r) + 1), static_cast<long>(n));
      mean += x[r];
    }
    for (auto& v : x) v -= mean / static_cast<long>(n);
    EXPECT_EQ(q.dim(), n - 1);
    for (const auto& cov : a.covers()) {
      if (cov.from == cov.to) continue;
      EXPECT_LT(x[cov.from], x[cov.to] + Rational(cov.shift));
    }
  }
}

TEST(SignedPair, Examples) {
  AffinePoset ck3 = corpus::circular_claw(3);
  EXPECT_EQ(tube_from_signed_pair(ck3, {1}, {}), (AffineTube{0, 1}));
  EXPECT_EQ(tube_from_signed_pair(ck3, {}, {2}), (AffineTube{-1, 0}));
  EXPECT_THROW(tube_from_signed_pair(ck3, {1}, {1}), OverlapError);
  EXPECT_THROW(tube_from_signed_pair(ck3, {}, {}), EmptyError);
  EXPECT_THROW(tube_from_signed_pair(corpus::circular_chain(3), {1}, {}), PreconditionError);
  EXPECT_TRUE(is_affine_tube(ck3, tube_from_signed_pair(ck3, {1}, {2})));
}

TEST(FaceProducts, DimensionsAddUp) {
  for (auto a : {corpus::circular_chain(4), corpus::circular_claw(3), corpus::circular_claw(4),
                 AffinePoset::build(3, skew_gens())}) {
    for (const auto& t : enumerate_proper_affine_tubings(a, false)) {
      auto parts = affine_face_product_decomposition(a, t);
      EXPECT_EQ(parts.finite.size(), t.size());
      EXPECT_EQ(parts.dimension(), static_cast<int>(a.order() - t.size()) - 1);
    }
  }
  AffinePoset cc3 = corpus::circular_chain(3);
  auto parts = affine_face_product_decomposition(cc3, {{1, 2}});
  EXPECT_EQ(parts.top.order(), 2u);
  EXPECT_EQ(parts.top_blocks, (std::vector<AffineTube>{{1, 2}, {3}}));
  EXPECT_EQ(parts.finite.front().poset.size(), 2u);
}

TEST(AffineRealization, Certifies) {
  for (auto a : {corpus::circular_chain(2), corpus::circular_chain(3), corpus::circular_claw(3),
                 corpus::circular_chain(4), corpus::circular_claw(4), AffinePoset::build(3, skew_gens())}) {
    Realization r;
    ASSERT_NO_THROW(r = realize_affine_cyclohedron(a)) << a.order();
    auto f = f_vector(r.lattice);
    EXPECT_EQ(static_cast<std::int64_t>(r.primal.vertices.size()), f.front());
    EXPECT_EQ(r.primal.dim(), a.order() - 1);
    EXPECT_EQ(r.primal.facets.size(), enumerate_affine_tubes(a, true).size());
  }
}

TEST(AffineRealization, PointForOrderOne) {
  Realization r = realize_affine_cyclohedron(corpus::circular_chain(1));
  EXPECT_EQ(r.primal.dim(), 0u);
  EXPECT_EQ(r.primal.vertices.size(), 1u);
}
