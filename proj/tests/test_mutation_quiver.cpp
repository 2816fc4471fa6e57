#include "smsw/mutation_quiver.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace smsw;

namespace {

std::vector<NakayamaAlgebra> algebras() {
  std::vector<NakayamaAlgebra> out;
  for (const auto& [e, l] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}, {3, 4}, {4, 5}, {2, 5}, {3, 5}})
    out.emplace_back(e, l);
  return out;
}

}  // namespace

TEST(NuOrbits, Partition) {
  const NakayamaAlgebra sym(4, 5);
  EXPECT_EQ(nu_orbit_partition(sym, sym.simples()).size(), 4u);
  const NakayamaAlgebra a(3, 3);
  const auto parts = nu_orbit_partition(a, a.simples());
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], a.simples());
  EXPECT_THROW(nu_orbit_partition(a, {{1, 1}}), std::invalid_argument);
  EXPECT_EQ(nu_stable_subsets(sym, sym.simples()).size(), 15u);
}

TEST(MutationQuiver, LeftReachesEverySms) {
  for (const auto& a : algebras()) {
    const auto q = build_mutation_quiver(a, a.simples());
    const auto all = a.all_sms();
    EXPECT_EQ(std::set<ModuleSet>(q.vertices.begin(), q.vertices.end()), std::set<ModuleSet>(all.begin(), all.end()))
        << a.name();
  }
}

TEST(MutationQuiver, BothDirectionsStronglyConnected) {
  for (const auto& a : algebras()) {
    MutationQuiverOptions opts;
    opts.right = true;
    const auto q = build_mutation_quiver(a, a.simples(), opts);
    EXPECT_TRUE(is_strongly_connected(q)) << a.name();
  }
}

TEST(MutationQuiver, EveryLeftArrowHasARightInverse) {
  for (const auto& a : algebras()) {
    MutationQuiverOptions opts;
    opts.right = true;
    const auto q = build_mutation_quiver(a, a.simples(), opts);
    for (const auto& arr : q.arrows) {
      if (arr.direction != Direction::Left) continue;
      ModuleSet back;
      for (const auto& m : arr.at) back.push_back(a.omega_inv(m));
      back = sorted(back);
      bool found = false;
      for (const auto& r : q.arrows)
        if (r.direction == Direction::Right && r.source == arr.target && r.target == arr.source && r.at == back)
          found = true;
      EXPECT_TRUE(found) << a.name() << " " << arr.label;
    }
  }
}

TEST(MutationQuiver, OutDegreeIsTheNumberOfOrbits) {
  for (const auto& a : algebras()) {
    const auto q = build_mutation_quiver(a, a.simples());
    std::vector<std::size_t> out(q.vertices.size(), 0);
    for (const auto& arr : q.arrows) ++out[static_cast<std::size_t>(arr.source)];
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
      EXPECT_EQ(out[i], nu_orbit_partition(a, q.vertices[i]).size());
  }
}

TEST(MutationQuiver, CompositeArrowsIncludeTheWorkedExample) {
  const NakayamaAlgebra a(4, 5);
  MutationQuiverOptions opts;
  opts.allow_composite = true;
  const auto q = build_mutation_quiver(a, a.simples(), opts);
  const ModuleSet target{{1, 3}, {2, 4}, {3, 4}, {4, 1}};
  bool found = false;
  for (const auto& arr : q.arrows)
    if (q.vertices[static_cast<std::size_t>(arr.source)] == a.simples() &&
        q.vertices[static_cast<std::size_t>(arr.target)] == target)
      found = found || arr.at == ModuleSet{{2, 1}, {3, 1}};
  EXPECT_TRUE(found);
}

TEST(MutationQuiver, Errors) {
  const NakayamaAlgebra a(4, 5);
  MutationQuiverOptions shallow;
  shallow.max_depth = 1;
  EXPECT_THROW(build_mutation_quiver(a, a.simples(), shallow), std::runtime_error);
  EXPECT_THROW(build_mutation_quiver(NakayamaAlgebra(5, 6), NakayamaAlgebra(5, 6).simples()), std::runtime_error);
  EXPECT_THROW(build_mutation_quiver(a, {{1, 1}}), std::invalid_argument);
}

TEST(MutationQuiver, JsonRoundTripAndDeterministicDot) {
  for (const auto& a : algebras()) {
    MutationQuiverOptions opts;
    opts.right = true;
    const auto q = build_mutation_quiver(a, a.simples(), opts);
    const auto j = to_json(q);
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(mutation_quiver_from_json(nlohmann::json::parse(j.dump())), q);
    EXPECT_EQ(to_dot(q), to_dot(build_mutation_quiver(a, a.simples(), opts)));
  }
  nlohmann::json bad = to_json(build_mutation_quiver(NakayamaAlgebra(2, 3), NakayamaAlgebra(2, 3).simples()));
  bad["schema"] = 2;
  EXPECT_THROW(mutation_quiver_from_json(bad), std::invalid_argument);
}

TEST(MutationQuiver, DotForASingleVertex) {
  MutationQuiver q;
  q.e = 2;
  q.loewy = 3;
  q.vertices.push_back({{1, 1}, {2, 1}});
  const auto dot = to_dot(q);
  EXPECT_EQ(dot, "digraph sms_mutation {\n  s0 [label=\"1 2\"];\n}\n");
}

TEST(MutationQuiver, ArrowLabels) {
  const NakayamaAlgebra a(2, 3);
  const auto q = build_mutation_quiver(a, a.simples());
  const auto dot = to_dot(q);
  EXPECT_NE(dot.find("[label=\"+ "), std::string::npos);
  for (const auto& arr : q.arrows) EXPECT_EQ(arr.label, orbit_label(a, arr.at));
}
