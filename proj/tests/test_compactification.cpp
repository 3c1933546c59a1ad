#include <gtest/gtest.h>

#include <random>

#include "posetahedra/compactification.hpp"
#include "posetahedra/corpus.hpp"
#include "posetahedra/errors.hpp"

using namespace posetahedra;

namespace {

Tube tube(const Poset& p, std::vector<ElementId> ids) { return make_tube(p, ids); }

Coordinates over(const Poset& p, std::vector<ElementId> ids, RationalVector v) {
  return Coordinates(p.set_of(ids), std::move(v));
}

/// Random strictly order-preserving point: each element sits a random
/// positive step above the largest of its lower covers.
RationalVector random_strict(const Poset& p, std::mt19937& rng) {
  RationalVector x(p.size());
  std::vector<bool> done(p.size(), false);
  for (std::size_t round = 0; round < p.size(); ++round) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (done[j]) continue;
      bool ready = true;
      Rational base = Rational(static_cast<long>(rng() % 7), 1 + rng() % 3);
      for (const auto& [a, b] : p.covers()) {
        if (b != j) continue;
        if (!done[a]) ready = false;
        else if (x[a] >= base) base = x[a];
      }
      if (!ready) continue;
      x[j] = base + Rational(1 + static_cast<long>(rng() % 5), 1 + rng() % 4);
      done[j] = true;
    }
  }
  return x;
}

/// Independent reading of the t_max inequalities at a given t.
bool expansion_inequalities_hold(const Poset& p, const ConfigPoint& c, Tube inner, Tube outer, const Rational& t) {
  const Coordinates& xo = c.at(outer);
  const Coordinates& xi = c.at(inner);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!inner.contains(i)) continue;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!outer.contains(j) || inner.contains(j)) continue;
      Rational moved = xo.at(i) + t * xi.at(i);
      if (p.less(i, j) && !(moved < xo.at(j))) return false;
      if (p.less(j, i) && !(xo.at(j) < moved)) return false;
    }
  }
  return true;
}

std::vector<Rational> sample_times(const std::optional<Rational>& tm) {
  if (!tm) return {Rational(1, 3), Rational(1), Rational(7, 2)};
  return {*tm / 2, *tm / 3, *tm * Rational(6, 7)};
}

}  // namespace

TEST(Embed, ChainOfThree) {
  Poset c3 = corpus::chain(3);
  ConfigPoint c = embed(c3, {Rational(-1, 2), 0, Rational(1, 2)});
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.at(c3.all()).values(), (RationalVector{Rational(-1, 2), 0, Rational(1, 2)}));
  EXPECT_EQ(c.at(tube(c3, {1, 2})).values(), (RationalVector{Rational(-1, 2), Rational(1, 2)}));
  EXPECT_EQ(c.at(tube(c3, {2, 3})).values(), (RationalVector{Rational(-1, 2), Rational(1, 2)}));
}

TEST(Embed, PairsNormalizeToHalves) {
  Poset c5 = corpus::chain(5);
  ConfigPoint c = embed(c5, {-7, -1, 0, 3, 11});
  for (const auto& [t, x] : c) {
    if (t.size() == 2) EXPECT_EQ(x.values(), (RationalVector{Rational(-1, 2), Rational(1, 2)}));
  }
}

TEST(Embed, W5ComponentsAreValid) {
  Poset w5 = corpus::w5();
  ConfigPoint c = embed(w5, {0, 1, 2, 5, 6});
  EXPECT_EQ(c.size(), 12u);
  EXPECT_NO_THROW(validate_config_point(w5, c));
  EXPECT_THROW(embed(w5, {0, 1, 1, 1, 6}), NotStrictError);
}

TEST(Coherence, EmbeddedPointsAreCoherent) {
  std::mt19937 rng(17);
  for (const auto& e : corpus::desk()) {
    if (e.poset.size() > 6) continue;
    const int trials = e.poset.size() <= 4 ? 1000 : 200;
    for (int k = 0; k < trials; ++k) {
      ConfigPoint c = embed(e.poset, random_strict(e.poset, rng));
      ASSERT_TRUE(is_coherent(e.poset, c)) << e.name;
      ASSERT_TRUE(tubing_of(e.poset, c).empty()) << e.name;
    }
  }
}

TEST(Coherence, FlippedPairIsIncoherent) {
  Poset c3 = corpus::chain(3);
  ConfigPoint c = embed(c3, {Rational(-1, 2), 0, Rational(1, 2)});
  c[tube(c3, {1, 2})] = over(c3, {1, 2}, {Rational(1, 2), Rational(-1, 2)});
  auto check = check_coherent(c3, c);
  EXPECT_FALSE(check.coherent);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_EQ(check.witness->first, tube(c3, {1, 2}));
  EXPECT_THROW(tubing_of(c3, c), PreconditionError);
}

TEST(BPartition, LevelSets) {
  Poset c3 = corpus::chain(3);
  auto b = b_partition(c3, c3.all(), Coordinates(c3.all(), {Rational(-1, 3), Rational(-1, 3), Rational(2, 3)}));
  EXPECT_EQ(b, (std::vector<Tube>{tube(c3, {3}), tube(c3, {1, 2})}));
  auto strict = b_partition(c3, c3.all(), Coordinates(c3.all(), {-1, 0, 1}));
  EXPECT_EQ(strict.size(), 3u);
  // Equal values on incomparable elements that are not linked stay apart.
  Poset k2 = corpus::claw(2);
  auto apart = b_partition(k2, k2.all(), Coordinates(k2.all(), {Rational(-2, 3), Rational(1, 3), Rational(1, 3)}));
  EXPECT_EQ(apart.size(), 3u);
}

TEST(TubingOf, ChainCollision) {
  Poset c3 = corpus::chain(3);
  ConfigPoint c;
  c[c3.all()] = Coordinates(c3.all(), {Rational(-1, 3), Rational(-1, 3), Rational(2, 3)});
  c[tube(c3, {1, 2})] = over(c3, {1, 2}, {Rational(-1, 2), Rational(1, 2)});
  c[tube(c3, {2, 3})] = over(c3, {2, 3}, {Rational(-1, 2), Rational(1, 2)});
  EXPECT_TRUE(is_coherent(c3, c));
  EXPECT_EQ(tubing_of(c3, c), (Tubing{tube(c3, {1, 2})}));
}

TEST(Synthesize, ChainOfFourExample) {
  Poset c4 = corpus::chain(4);
  Tubing t{tube(c4, {1, 2})};
  TubePoints interior;
  interior[c4.all()] = Coordinates(c4.all(), {Rational(-2, 5), Rational(-2, 5), Rational(1, 5), Rational(3, 5)});
  interior[t[0]] = over(c4, {1, 2}, {Rational(-1, 2), Rational(1, 2)});
  ConfigPoint c = synthesize(c4, t, interior);
  EXPECT_EQ(c.at(tube(c4, {1, 2, 3})).values(), (RationalVector{Rational(-1, 3), Rational(-1, 3), Rational(2, 3)}));
  EXPECT_TRUE(is_coherent(c4, c));
  EXPECT_EQ(tubing_of(c4, c), t);

  TubePoints wrong = interior;
  wrong[c4.all()] = Coordinates(c4.all(), {Rational(-3, 5), Rational(-1, 5), Rational(1, 5), Rational(3, 5)});
  EXPECT_THROW(synthesize(c4, t, wrong), WrongFaceError);
}

TEST(Synthesize, EmptyTubingIsEmbed) {
  Poset w5 = corpus::w5();
  ConfigPoint e = embed(w5, {0, 1, 2, 5, 6});
  TubePoints interior{{w5.all(), e.at(w5.all())}};
  EXPECT_EQ(synthesize(w5, {}, interior), e);
}

TEST(LimitSample, ChainOfFour) {
  Poset c4 = corpus::chain(4);
  Tube t12 = tube(c4, {1, 2});
  TubePoints interior;
  interior[c4.all()] = Coordinates(c4.all(), {Rational(-2, 5), Rational(-2, 5), Rational(1, 5), Rational(3, 5)});
  interior[t12] = over(c4, {1, 2}, {Rational(-1, 2), Rational(1, 2)});
  ConfigPoint c = synthesize(c4, {t12}, interior);
  RationalVector y = limit_sample(c4, c, {{t12, Rational(1, 100)}});
  EXPECT_EQ(y, (RationalVector{Rational(-2, 5) - Rational(1, 200), Rational(-2, 5) + Rational(1, 200), Rational(1, 5),
                               Rational(3, 5)}));
  EXPECT_THROW(limit_sample(c4, c, {{t12, Rational(0)}}), RegimeError);
  EXPECT_THROW(limit_sample(c4, c, {{t12, Rational(5)}}), RegimeError);

  // The distance to the limit shrinks linearly in t.
  Rational t = Rational(1, 100);
  Rational first = embed_distance(c4, c, limit_sample(c4, c, {{t12, t}}));
  Rational constant = 2 * first / t;
  for (int k = 2; k <= 6; ++k, t /= 10) {
    Rational d = embed_distance(c4, c, limit_sample(c4, c, {{t12, t}}));
    EXPECT_GT(d, 0);
    EXPECT_LE(d, constant * t);
  }
}

TEST(LimitSample, EmptyTubingReturnsThePoint) {
  Poset w5 = corpus::w5();
  ConfigPoint e = embed(w5, {0, 1, 2, 5, 6});
  EXPECT_EQ(limit_sample(w5, e, {}), e.at(w5.all()).values());
}

TEST(LimitSample, GuardOnNestedTubes) {
  Poset c4 = corpus::chain(4);
  Tubing t{tube(c4, {1, 2}), tube(c4, {1, 2, 3})};
  ConfigPoint c = synthesize(c4, t, canonical_interior(c4, t));
  EXPECT_THROW(limit_sample(c4, c, {{t[0], Rational(1, 100)}, {t[1], Rational(1, 100)}}), RegimeError);
  RationalVector y = limit_sample(c4, c, {{t[0], Rational(1, 1000)}, {t[1], Rational(1, 100)}});
  EXPECT_TRUE(tubing_of(c4, embed(c4, y)).empty());
}

TEST(TMax, Examples) {
  Poset c3 = corpus::chain(3);
  Tube t12 = tube(c3, {1, 2});
  TubePoints i3;
  i3[c3.all()] = Coordinates(c3.all(), {Rational(-1, 3), Rational(-1, 3), Rational(2, 3)});
  i3[t12] = over(c3, {1, 2}, {Rational(-1, 2), Rational(1, 2)});
  ConfigPoint c = synthesize(c3, {t12}, i3);
  EXPECT_EQ(t_max(c3, c, t12, c3.all()), Rational(2));

  Poset c4 = corpus::chain(4);
  Tube u12 = tube(c4, {1, 2});
  TubePoints i4;
  i4[c4.all()] = Coordinates(c4.all(), {Rational(-2, 5), Rational(-2, 5), Rational(1, 5), Rational(3, 5)});
  i4[u12] = over(c4, {1, 2}, {Rational(-1, 2), Rational(1, 2)});
  ConfigPoint d = synthesize(c4, {u12}, i4);
  EXPECT_EQ(t_max(c4, d, u12, c4.all()), Rational(6, 5));

  Poset k2 = corpus::claw(2);
  Tube t01 = tube(k2, {0, 1});
  TubePoints ik;
  ik[k2.all()] = Coordinates(k2.all(), {Rational(-1, 3), Rational(-1, 3), Rational(2, 3)});
  ik[t01] = over(k2, {0, 1}, {Rational(-1, 2), Rational(1, 2)});
  ConfigPoint e = synthesize(k2, {t01}, ik);
  EXPECT_FALSE(t_max(k2, e, t01, k2.all()).has_value());

  EXPECT_THROW(t_max(c3, embed(c3, {-1, 0, 1}), t12, c3.all()), NotAdjacentError);
}

TEST(Expand, ChainOfThree) {
  Poset c3 = corpus::chain(3);
  Tube t12 = tube(c3, {1, 2});
  TubePoints interior;
  interior[c3.all()] = Coordinates(c3.all(), {Rational(-1, 3), Rational(-1, 3), Rational(2, 3)});
  interior[t12] = over(c3, {1, 2}, {Rational(-1, 2), Rational(1, 2)});
  ConfigPoint c = synthesize(c3, {t12}, interior);
  EXPECT_EQ(expand(c3, c, t12, c3.all(), 0), c);
  ConfigPoint y = expand(c3, c, t12, c3.all(), 1);
  EXPECT_EQ(y.at(c3.all()).values(), (RationalVector{Rational(-5, 9), Rational(1, 9), Rational(4, 9)}));
  EXPECT_TRUE(tubing_of(c3, y).empty());
  EXPECT_THROW(expand(c3, c, t12, c3.all(), 2), RangeError);
  EXPECT_THROW(expand(c3, c, t12, c3.all(), -1), RangeError);

  auto [back, t] = collapse(c3, y, t12, c3.all());
  EXPECT_EQ(back, c);
  EXPECT_EQ(t, 1);
  auto [same, zero] = collapse(c3, c, t12, c3.all());
  EXPECT_EQ(same, c);
  EXPECT_EQ(zero, 0);
}

TEST(Collapse, AverageSeparationIsRequired) {
  Poset k2 = corpus::claw(2);
  ConfigPoint y = embed(k2, {0, 10, 1});
  EXPECT_THROW(collapse(k2, y, tube(k2, {0, 1}), k2.all()), NotInCollError);
  ConfigPoint ok = embed(k2, {0, 1, 10});
  auto [x, t] = collapse(k2, ok, tube(k2, {0, 1}), k2.all());
  EXPECT_GT(t, 0);
  EXPECT_EQ(tubing_of(k2, x), (Tubing{tube(k2, {0, 1})}));
  EXPECT_EQ(expand(k2, x, tube(k2, {0, 1}), k2.all(), t), ok);
}

TEST(Composite, ChainOfFourRoundTrip) {
  Poset c4 = corpus::chain(4);
  Tubing t{tube(c4, {1, 2}), tube(c4, {1, 2, 3})};
  ConfigPoint c = synthesize(c4, t, canonical_interior(c4, t));
  std::vector<Tube> seq = expansion_sequence(t, {});
  EXPECT_EQ(seq, t);
  std::vector<Rational> times{Rational(1, 100), Rational(1, 50)};
  ConfigPoint y = composite_expand(c4, c, seq, times);
  EXPECT_TRUE(tubing_of(c4, y).empty());
  auto [back, recovered] = composite_collapse(c4, y, t, seq);
  EXPECT_EQ(back, c);
  EXPECT_EQ(recovered, times);

  EXPECT_EQ(composite_expand(c4, c, {}, {}), c);
  std::vector<Tube> reversed{seq[1], seq[0]};
  EXPECT_THROW(composite_expand(c4, c, reversed, times), PreconditionError);
  try {
    composite_expand(c4, c, seq, {Rational(100), Rational(1, 50)});
    FAIL() << "expected NotExpandableError";
  } catch (const NotExpandableError& e) {
    EXPECT_EQ(e.index, 1u);
  }
}

TEST(Strata, ReconstructionRoundTripsAndDimensions) {
  for (const auto& e : corpus::desk()) {
    const Poset& p = e.poset;
    if (p.size() > 6 || p.size() < 3) continue;
    for (const Tubing& t : enumerate_proper_tubings(p, false)) {
      ConfigPoint c = synthesize(p, t, canonical_interior(p, t));
      ASSERT_EQ(tubing_of(p, c), t) << e.name;
      ASSERT_TRUE(is_coherent(p, c));
      TubingTree tree(p, t);
      for (const auto& [s, x] : c) {
        Tube par = tree.smallest_containing(s);
        EXPECT_GT(alpha(p, s, c.at(par)), 0);
        EXPECT_EQ(x, res(p, s, c.at(par)));
      }
      EXPECT_EQ(stratum_dimension(p, t), static_cast<int>(p.size() - t.size()) - 2);
      for (Tube inner : t) {
        Tube outer = tree.parent(inner);
        auto tm = t_max(p, c, inner, outer);
        if (tm) {
          ASSERT_GT(*tm, 0);
          EXPECT_FALSE(expansion_inequalities_hold(p, c, inner, outer, *tm));
          EXPECT_TRUE(expansion_inequalities_hold(p, c, inner, outer, *tm * Rational(999, 1000)));
        } else {
          EXPECT_TRUE(expansion_inequalities_hold(p, c, inner, outer, Rational(1000000)));
        }
        for (const Rational& time : sample_times(tm)) {
          ConfigPoint y = expand(p, c, inner, outer, time);
          Tubing rest = t;
          rest.erase(std::find(rest.begin(), rest.end(), inner));
          ASSERT_EQ(tubing_of(p, y), rest);
          auto [back, recovered] = collapse(p, y, inner, outer);
          ASSERT_EQ(back, c);
          ASSERT_EQ(recovered, time);
        }
      }
    }
  }
}

TEST(Strata, DimensionIdentityUpToSeven) {
  for (const Poset& p : {corpus::chain(7), corpus::claw(6)}) {
    for (const Tubing& t : enumerate_proper_tubings(p, false)) {
      EXPECT_EQ(stratum_dimension(p, t), static_cast<int>(p.size() - t.size()) - 2);
    }
  }
}

TEST(Closure, ApproachCurvesLandInLargerTubings) {
  Poset w5 = corpus::w5();
  auto tubings = enumerate_proper_tubings(w5, false);
  for (const Tubing& fine : tubings) {
    ConfigPoint x = synthesize(w5, fine, canonical_interior(w5, fine));
    for (const Tubing& coarse : tubings) {
      bool sub = std::all_of(coarse.begin(), coarse.end(),
                             [&](Tube s) { return std::find(fine.begin(), fine.end(), s) != fine.end(); });
      if (!sub) continue;
      auto curve = approach_curve(w5, x, coarse);
      ConfigPoint limit = curve_limit(w5, coarse, curve);
      EXPECT_EQ(limit, x);
      Tubing reached = tubing_of(w5, limit);
      for (Tube s : coarse) EXPECT_NE(std::find(reached.begin(), reached.end(), s), reached.end());
      EXPECT_EQ(tubing_of(w5, curve_point(w5, coarse, curve, Rational(1, 1000))), coarse);
    }
  }
}

TEST(RatioDemo, LimitsAgreeRatiosDiffer) {
  RatioDemo a = ratio_counterexample_demo(Rational(0), Rational(1));
  EXPECT_TRUE(a.limits_agree);
  EXPECT_GE(a.final_gap, Rational(1, 2));
  ASSERT_EQ(a.first.samples.size(), 5u);
  EXPECT_EQ(a.first.samples.back().ratio, 0);
  EXPECT_EQ(a.second.samples.back().ratio, 1);
  EXPECT_LE(a.first.samples.back().distance, Rational(1, 1000000000));
  EXPECT_LE(a.second.samples.back().distance, Rational(1, 1000000000));

  RatioDemo b = ratio_counterexample_demo(Rational(1), std::nullopt);
  EXPECT_TRUE(b.limits_agree);
  EXPECT_GE(b.final_gap, Rational(1000));

  RatioDemo same = ratio_counterexample_demo(Rational(1, 3), Rational(1, 3));
  EXPECT_TRUE(same.limits_agree);
  EXPECT_EQ(same.final_gap, 0);
}
