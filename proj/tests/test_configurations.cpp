#include "smsw/brauer.hpp"
#include "smsw/configurations.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace smsw;

namespace {

RfsType type(Family f, int n, Frequency freq, int t) { return RfsType{DynkinGraph(f, n), freq, t, true}; }

// All vertex subsets satisfying the definition, straight from the hom matrix.
std::vector<Configuration> brute_force_configurations(const StableTranslationQuiver& gam) {
  const auto h = quotient_hom_matrix(gam);
  const auto n = gam.size();
  std::vector<Configuration> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Configuration c;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) c.push_back(static_cast<int>(i));
    bool ok = true;
    for (int a : c)
      for (int b : c) {
        const int d = h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (a == b ? d != 1 : d != 0) ok = false;
      }
    for (std::size_t e = 0; e < n && ok; ++e) {
      bool hit = false;
      for (int f : c) hit = hit || h[e][static_cast<std::size_t>(f)] != 0;
      ok = hit;
    }
    if (ok) out.push_back(c);
  }
  return out;
}

std::set<Configuration> as_set(const std::vector<Configuration>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Configurations, BacktrackingMatchesSubsetSearch) {
  for (const auto& t : {type(Family::A, 1, Frequency(4), 1), type(Family::A, 2, Frequency(1, 2), 1),
                        type(Family::A, 2, Frequency(1), 1), type(Family::A, 2, Frequency(3, 2), 1),
                        type(Family::A, 3, Frequency(1, 3), 1), type(Family::A, 3, Frequency(1), 1),
                        type(Family::A, 3, Frequency(1), 2), type(Family::A, 4, Frequency(1, 2), 1),
                        type(Family::A, 4, Frequency(1), 1), type(Family::A, 5, Frequency(2, 5), 1)}) {
    const StableTranslationQuiver gam(t);
    ASSERT_LE(gam.size(), 16u);
    const auto fast = enumerate_configurations(gam);
    EXPECT_EQ(as_set(fast), as_set(brute_force_configurations(gam))) << format_type(t);
    for (const auto& c : fast) EXPECT_TRUE(is_configuration(gam, c).ok);
  }
}

TEST(Configurations, CountsOnSelfinjectiveNakayamaFamilies) {
  // Subset search gives 1, 2, 5, 14 for A_n / tau^n, n = 1..4.
  const std::vector<std::size_t> expected{1, 2, 5, 14};
  for (int n = 1; n <= 4; ++n) {
    const StableTranslationQuiver gam(type(Family::A, n, Frequency(1), 1));
    EXPECT_EQ(enumerate_configurations(gam).size(), expected[static_cast<std::size_t>(n - 1)]);
  }
}

TEST(Configurations, A1HasExactlyOneConfiguration) {
  for (int s = 1; s <= 6; ++s) {
    const StableTranslationQuiver gam(type(Family::A, 1, Frequency(s), 1));
    const auto configs = enumerate_configurations(gam);
    ASSERT_EQ(configs.size(), 1u);
    EXPECT_EQ(configs[0].size(), static_cast<std::size_t>(s));
  }
}

TEST(Configurations, CardinalityIsTheNumberOfSimples) {
  for (const auto& t : {type(Family::A, 4, Frequency(1, 2), 1), type(Family::A, 5, Frequency(1), 2),
                        type(Family::D, 4, Frequency(1), 1), type(Family::D, 6, Frequency(1, 3), 1),
                        type(Family::D, 6, Frequency(2, 3), 1)}) {
    const StableTranslationQuiver gam(t);
    for (const auto& c : enumerate_configurations(gam))
      EXPECT_EQ(static_cast<int>(c.size()), num_simples(t)) << format_type(t);
  }
}

TEST(Configurations, ThreadedEnumerationIsIdentical) {
  const StableTranslationQuiver gam(type(Family::D, 5, Frequency(1), 1));
  EXPECT_EQ(enumerate_configurations(gam, EnumerationOptions{1}), enumerate_configurations(gam, EnumerationOptions{4}));
}

TEST(Configurations, RejectionReasons) {
  const StableTranslationQuiver gam(type(Family::A, 3, Frequency(1), 2));
  const auto h = quotient_hom_matrix(gam);
  EXPECT_FALSE(is_configuration(gam, h, {}).ok);
  // A vertex and its successor along an arrow are not orthogonal.
  const auto [u, v] = gam.arrows().front();
  const auto bad = is_configuration(gam, h, {std::min(u, v), std::max(u, v)});
  EXPECT_FALSE(bad.ok);
  EXPECT_NE(bad.reason.find("Hom"), std::string::npos);
  const auto configs = enumerate_configurations(gam, h);
  ASSERT_FALSE(configs.empty());
  auto partial = configs[0];
  partial.pop_back();
  const auto uncovered = is_configuration(gam, h, partial);
  EXPECT_FALSE(uncovered.ok);
  EXPECT_NE(uncovered.reason.find("covered"), std::string::npos);
}

TEST(Configurations, ClosedUnderAutomorphisms) {
  for (const auto& t : {type(Family::A, 5, Frequency(1), 2), type(Family::D, 4, Frequency(1), 3),
                        type(Family::D, 6, Frequency(1, 3), 1)}) {
    const StableTranslationQuiver gam(t);
    const auto configs = enumerate_configurations(gam);
    const auto set = as_set(configs);
    for (const auto& a : automorphisms(gam))
      for (const auto& c : configs) EXPECT_TRUE(set.count(apply(a, c))) << format_type(t);
  }
}

TEST(Configurations, LiftsArePeriodic) {
  const StableTranslationQuiver gam(type(Family::D, 5, Frequency(1), 2));
  for (const auto& c : enumerate_configurations(gam)) {
    const auto lifted = lift_configuration(gam, c, -40, 40);
    const std::set<ZVertex> s(lifted.begin(), lifted.end());
    for (const auto& v : lifted) {
      const auto w = gam.deck(v);
      if (w.p <= 40) {
        EXPECT_TRUE(s.count(w));
      }
      EXPECT_TRUE(std::count(c.begin(), c.end(), gam.index_of(v)) == 1);
    }
  }
}

TEST(Orbits, Examples) {
  auto orbits_of = [](const RfsType& t) {
    const StableTranslationQuiver gam(t);
    return orbit_decomposition(gam, enumerate_configurations(gam));
  };
  EXPECT_EQ(orbits_of(type(Family::A, 3, Frequency(1), 2)).size(), 1u);
  EXPECT_EQ(orbits_of(type(Family::A, 5, Frequency(1), 2)).size(), 2u);
  EXPECT_EQ(orbits_of(type(Family::D, 4, Frequency(1), 1)).size(), 2u);
  std::size_t total = 0;
  const StableTranslationQuiver gam(type(Family::D, 4, Frequency(1), 1));
  const auto configs = enumerate_configurations(gam);
  for (const auto& o : orbit_decomposition(gam, configs)) total += o.size;
  EXPECT_EQ(total, configs.size());
}

TEST(Orbits, A3TwistedOrbitIsAStaircase) {
  // One orbit of three configurations, each liftable to one vertex per node
  // on three consecutive levels.
  const StableTranslationQuiver gam(type(Family::A, 3, Frequency(1), 2));
  const auto configs = enumerate_configurations(gam);
  const auto orbits = orbit_decomposition(gam, configs);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].size, 3u);
  for (const auto& c : configs) {
    ASSERT_EQ(c.size(), 3u);
    const auto lifted = lift_configuration(gam, c, -12, 12);
    bool found = false;
    for (int p0 = -10; p0 <= 8 && !found; ++p0) {
      std::set<int> nodes;
      std::set<int> levels;
      for (const auto& v : lifted)
        if (v.p >= p0 && v.p <= p0 + 2) {
          nodes.insert(v.q);
          levels.insert(v.p);
        }
      std::size_t in_range = 0;
      for (const auto& v : lifted) in_range += (v.p >= p0 && v.p <= p0 + 2);
      found = in_range == 3 && nodes.size() == 3 && levels.size() == 3;
    }
    EXPECT_TRUE(found);
  }
}

TEST(Orbits, AgreeWithBrauerTreeCounts) {
  for (const auto& [d, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3},
                                                             {3, 1}, {3, 2}, {4, 1}, {5, 1}}) {
    const StableTranslationQuiver gam(type(Family::A, d * m, Frequency(1, m), 1));
    const auto orbits = orbit_decomposition(gam, enumerate_configurations(gam));
    EXPECT_EQ(orbits.size(), count_brauer_trees(d, m)) << "d=" << d << " m=" << m;
  }
}

TEST(Orbits, TransitiveExactlyOnTheListedFamilies) {
  const auto entries = transitivity_list_check(6, 3, 60);
  EXPECT_GT(entries.size(), 30u);
  for (const auto& e : entries)
    EXPECT_TRUE(e.consistent()) << format_type(e.type) << " orbits=" << e.orbits;
}
