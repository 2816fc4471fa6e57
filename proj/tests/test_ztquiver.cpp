#include "smsw/ztquiver.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace smsw;

namespace {

RfsType type(Family f, int n, Frequency freq, int t) { return RfsType{DynkinGraph(f, n), freq, t, true}; }

std::vector<RfsType> sample_types() {
  return {type(Family::A, 1, Frequency(3), 1),     type(Family::A, 2, Frequency(1, 2), 1),
          type(Family::A, 3, Frequency(1), 2),     type(Family::A, 4, Frequency(1), 1),
          type(Family::A, 4, Frequency(1, 2), 1),  type(Family::A, 5, Frequency(1), 2),
          type(Family::D, 4, Frequency(1), 1),     type(Family::D, 4, Frequency(1), 2),
          type(Family::D, 4, Frequency(1), 3),     type(Family::D, 5, Frequency(1), 2),
          type(Family::D, 6, Frequency(1, 3), 1),  type(Family::D, 6, Frequency(2, 3), 1),
          type(Family::E, 6, Frequency(1), 2),     type(Family::E, 7, Frequency(1), 1)};
}

// Permutations preserving the arrow multiset and commuting with tau,
// checked directly. Only for very small quivers.
std::size_t brute_force_automorphism_count(const StableTranslationQuiver& g) {
  const auto n = g.size();
  std::multiset<std::pair<int, int>> arrows(g.arrows().begin(), g.arrows().end());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (perm[static_cast<std::size_t>(g.tau(static_cast<int>(i)))] != g.tau(perm[i])) ok = false;
    if (!ok) continue;
    std::multiset<std::pair<int, int>> mapped;
    for (const auto& [u, v] : g.arrows()) mapped.emplace(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    if (mapped == arrows) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST(ZQ, SliceAndCrossArrows) {
  const DynkinGraph a3(Family::A, 3);
  // Tree arrows 2 -> 1 and 3 -> 2.
  const auto s = successors(a3, {0, 2});
  std::set<ZVertex> got(s.begin(), s.end());
  EXPECT_EQ(got, (std::set<ZVertex>{{0, 1}, {1, 3}}));
  for (int p = -2; p <= 2; ++p)
    for (int q = 1; q <= 3; ++q)
      for (const auto& y : successors(a3, {p, q})) {
        const auto pre = predecessors(a3, y);
        EXPECT_NE(std::find(pre.begin(), pre.end(), ZVertex{p, q}), pre.end());
      }
}

TEST(ZQ, MeshesAreSymmetric) {
  // For every arrow u -> v there is an arrow tau(v) -> u.
  for (const auto& g : {DynkinGraph(Family::A, 5), DynkinGraph(Family::D, 5), DynkinGraph(Family::E, 8)})
    for (int q = 1; q <= g.rank(); ++q)
      for (const auto& v : successors(g, {0, q})) {
        const auto back = successors(g, tau(v));
        EXPECT_NE(std::find(back.begin(), back.end(), ZVertex{0, q}), back.end()) << g.name();
      }
}

TEST(BuildWindow, SingleSliceOfA2) {
  const auto w = build_window(DynkinGraph(Family::A, 2), 0, 0);
  EXPECT_EQ(w.vertices.size(), 2u);
  ASSERT_EQ(w.arrows.size(), 1u);
  std::set<ZVertex> ends{w.arrows[0].first, w.arrows[0].second};
  EXPECT_EQ(ends, (std::set<ZVertex>{{0, 1}, {0, 2}}));
  EXPECT_THROW(build_window(DynkinGraph(Family::A, 2), 1, 0), std::invalid_argument);
}

TEST(BuildWindow, ArrowCount) {
  // n-1 slice arrows per level, n-1 cross arrows between consecutive levels.
  const DynkinGraph d5(Family::D, 5);
  const auto w = build_window(d5, -3, 4);
  EXPECT_EQ(w.vertices.size(), 40u);
  EXPECT_EQ(w.arrows.size(), 8u * 4 + 7u * 4);
}

TEST(LiftGraphAutomorphism, IsAnAutomorphismOfZQ) {
  for (const auto& [g, t] : std::vector<std::pair<DynkinGraph, int>>{{DynkinGraph(Family::A, 5), 2},
                                                                    {DynkinGraph(Family::D, 4), 3},
                                                                    {DynkinGraph(Family::D, 6), 2},
                                                                    {DynkinGraph(Family::E, 6), 2}}) {
    const auto z = lift_graph_automorphism(g, torsion_automorphism(g, t));
    for (int q = 1; q <= g.rank(); ++q) {
      const ZVertex v{0, q};
      auto s = successors(g, v);
      std::vector<ZVertex> mapped;
      for (const auto& x : s) mapped.push_back(z(x));
      auto s2 = successors(g, z(v));
      std::sort(mapped.begin(), mapped.end());
      std::sort(s2.begin(), s2.end());
      EXPECT_EQ(mapped, s2) << g.name();
      // Order t on ZQ, not just on the graph.
      ZVertex cur = v;
      for (int k = 0; k < t; ++k) cur = z(cur);
      EXPECT_EQ(cur, v) << g.name();
    }
  }
}

TEST(Quotient, VertexCounts) {
  EXPECT_EQ(quotient(type(Family::A, 3, Frequency(1), 2)).size(), 9u);
  EXPECT_EQ(quotient(type(Family::D, 4, Frequency(1), 1)).size(), 20u);
  EXPECT_EQ(quotient(type(Family::A, 4, Frequency(1), 1)).size(), 16u);
  for (const auto& t : sample_types()) {
    const auto g = quotient(t);
    EXPECT_EQ(static_cast<int>(g.size()), t.graph.rank() * g.r()) << format_type(t);
  }
  EXPECT_THROW(quotient(type(Family::A, 4, Frequency(1), 2)), std::invalid_argument);
}

TEST(Quotient, DeckTransformationIsCompatible) {
  for (const auto& t : sample_types()) {
    const auto g = quotient(t);
    for (int p = -2 * g.period(); p <= 2 * g.period(); ++p)
      for (int q = 1; q <= t.graph.rank(); ++q) {
        const ZVertex v{p, q};
        EXPECT_EQ(g.deck_inv(g.deck(v)), v);
        EXPECT_GT(g.deck(v).p, v.p);
        EXPECT_EQ(g.index_of(g.deck(v)), g.index_of(v));
        EXPECT_EQ(g.canonical(g.canonical(v)), g.canonical(v));
        EXPECT_EQ(g.index_of(tau(v)), g.tau(g.index_of(v)));
        for (const auto& s : successors(t.graph, v)) {
          const auto& out = g.out(g.index_of(v));
          EXPECT_NE(std::find(out.begin(), out.end(), g.index_of(s)), out.end());
        }
      }
  }
}

TEST(Quotient, MeshesAreSymmetricWithMultiplicity) {
  for (const auto& t : sample_types()) {
    const auto g = quotient(t);
    std::multiset<std::pair<int, int>> arrows(g.arrows().begin(), g.arrows().end());
    std::multiset<std::pair<int, int>> shifted;
    for (const auto& [u, v] : g.arrows()) shifted.emplace(g.tau(v), u);
    EXPECT_EQ(arrows, shifted) << format_type(t);
  }
}

TEST(Quotient, TauHasPeriodDividingTheLevelPeriod) {
  for (const auto& t : sample_types()) {
    const auto g = quotient(t);
    for (std::size_t i = 0; i < g.size(); ++i) {
      int j = static_cast<int>(i);
      for (int k = 0; k < g.period(); ++k) j = g.tau(j);
      EXPECT_EQ(j, static_cast<int>(i)) << format_type(t);
    }
  }
}

TEST(Quotient, Lifts) {
  const auto g = quotient(type(Family::A, 5, Frequency(1), 2));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto l = g.lift(static_cast<int>(i), 4);
    for (std::size_t k = 0; k < l.size(); ++k) {
      EXPECT_EQ(g.index_of(l[k]), static_cast<int>(i));
      if (k > 0) {
        EXPECT_EQ(l[k], g.deck(l[k - 1]));
      }
    }
    const auto r = g.lifts_in_range(static_cast<int>(i), -20, 20);
    for (const auto& v : r) {
      EXPECT_GE(v.p, -20);
      EXPECT_LE(v.p, 20);
      EXPECT_EQ(g.index_of(v), static_cast<int>(i));
    }
    // Every vertex of the window in this class is found.
    std::size_t direct = 0;
    for (int p = -20; p <= 20; ++p)
      for (int q = 1; q <= 5; ++q)
        if (g.index_of({p, q}) == static_cast<int>(i)) ++direct;
    EXPECT_EQ(r.size(), direct);
  }
  EXPECT_THROW(g.lift(0, 0), std::invalid_argument);
}

TEST(Automorphisms, FormAGroupContainingTau) {
  for (const auto& t : sample_types()) {
    const auto g = quotient(t);
    if (g.size() > 40) continue;
    const auto group = automorphisms(g);
    std::set<QuiverAutomorphism> set(group.begin(), group.end());
    ASSERT_EQ(set.size(), group.size());
    QuiverAutomorphism id;
    id.image.resize(g.size());
    std::iota(id.image.begin(), id.image.end(), 0);
    EXPECT_TRUE(set.count(id));
    EXPECT_TRUE(set.count(QuiverAutomorphism{g.tau_permutation()}));
    for (const auto& a : group) {
      EXPECT_TRUE(is_automorphism(g, a));
      EXPECT_TRUE(set.count(a.inverse()));
      for (const auto& b : group) EXPECT_TRUE(set.count(a.compose(b)));
    }
  }
}

TEST(Automorphisms, MatchBruteForceOnSmallQuivers) {
  for (const auto& t : {type(Family::A, 1, Frequency(5), 1), type(Family::A, 2, Frequency(1, 2), 1),
                        type(Family::A, 2, Frequency(1), 1), type(Family::A, 3, Frequency(1, 3), 1),
                        type(Family::A, 3, Frequency(2, 3), 1), type(Family::A, 4, Frequency(1, 4), 1),
                        type(Family::A, 4, Frequency(1, 2), 1), type(Family::A, 3, Frequency(1), 2)}) {
    const auto g = quotient(t);
    EXPECT_EQ(automorphisms(g).size(), brute_force_automorphism_count(g)) << format_type(t);
  }
}
