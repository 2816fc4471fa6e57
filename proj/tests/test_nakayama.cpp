#include "smsw/configurations.hpp"
#include "smsw/nakayama.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace smsw;

namespace {

// Uniserial maps: the image has top t and is the length-j submodule of the
// target, whose top is t' + l' - j.
int hom_dim_closed_form(int e, const SerialModule& m, const SerialModule& n) {
  int d = 0;
  for (int j = 1; j <= std::min(m.length, n.length); ++j)
    if (((m.top - (n.top + n.length - j)) % e + e) % e == 0) ++d;
  return d;
}

std::vector<NakayamaAlgebra> small_algebras() {
  std::vector<NakayamaAlgebra> out;
  for (const auto& [e, l] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 3},
                                                             {3, 4}, {3, 5}, {4, 4}, {4, 5}})
    out.emplace_back(e, l);
  return out;
}

SerialModule M(int t, int l) { return {t, l}; }

}  // namespace

TEST(Nakayama, Basics) {
  const NakayamaAlgebra a(4, 5);
  EXPECT_EQ(a.nonprojectives().size(), 16u);
  EXPECT_TRUE(a.is_symmetric());
  EXPECT_FALSE(NakayamaAlgebra(3, 3).is_symmetric());
  EXPECT_EQ(a.column(M(2, 4)), "2/3/4/1");
  EXPECT_EQ(a.wrap(0), 4);
  EXPECT_EQ(a.wrap(9), 1);
  EXPECT_THROW(NakayamaAlgebra(0, 3), std::invalid_argument);
  EXPECT_THROW(NakayamaAlgebra(3, 1), std::invalid_argument);
  EXPECT_THROW(a.module(1, 6), std::invalid_argument);
}

TEST(Nakayama, HomDimensionsMatchClosedForm) {
  for (const auto& a : {NakayamaAlgebra(3, 4), NakayamaAlgebra(2, 5), NakayamaAlgebra(4, 5)})
    for (int t = 1; t <= a.e(); ++t)
      for (int l = 1; l <= a.loewy_length(); ++l)
        for (int t2 = 1; t2 <= a.e(); ++t2)
          for (int l2 = 1; l2 <= a.loewy_length(); ++l2)
            EXPECT_EQ(a.hom_dim(M(t, l), M(t2, l2)), hom_dim_closed_form(a.e(), M(t, l), M(t2, l2))) << a.name();
}

TEST(Nakayama, StableHomExamples) {
  const NakayamaAlgebra a(4, 5);
  EXPECT_EQ(a.stable_hom_dim(M(1, 1), M(1, 1)), 1);
  EXPECT_EQ(a.stable_hom_dim(M(1, 1), M(2, 1)), 0);
  EXPECT_THROW(a.stable_hom_dim(M(1, 5), M(1, 1)), std::invalid_argument);
  EXPECT_THROW(a.stable_hom_dim(M(5, 1), M(1, 1)), std::invalid_argument);
  for (const auto& m : a.nonprojectives()) EXPECT_GE(a.stable_hom_dim(m, m), 1);
}

TEST(Nakayama, StableHomOverRationalsAgrees) {
  for (const auto& a : {NakayamaAlgebra(3, 4), NakayamaAlgebra(2, 5), NakayamaAlgebra(3, 5)})
    for (const auto& m : a.nonprojectives())
      for (const auto& n : a.nonprojectives())
        EXPECT_EQ(a.stable_hom_dim(m, n), stable_hom_dim_over<Rational>(a.e(), a.loewy_length(), m, n));
}

TEST(Nakayama, StableHomMatchesMeshCategoryOfStableQuiver) {
  for (const auto& a : small_algebras()) {
    const StableTranslationQuiver gam(a.stable_type());
    const auto h = quotient_hom_matrix(gam);
    for (const auto& m : a.nonprojectives())
      for (const auto& n : a.nonprojectives()) {
        const auto e = static_cast<std::size_t>(gam.index_of(a.ar_coordinate(m)));
        const auto f = static_cast<std::size_t>(gam.index_of(a.ar_coordinate(n)));
        ASSERT_EQ(a.stable_hom_dim(m, n), h[e][f]) << a.name() << " " << label(m) << " " << label(n);
      }
  }
}

TEST(Nakayama, ArCoordinatesAreABijection) {
  for (const auto& a : small_algebras()) {
    const StableTranslationQuiver gam(a.stable_type());
    std::set<int> hit;
    for (const auto& m : a.nonprojectives()) {
      const int i = gam.index_of(a.ar_coordinate(m));
      hit.insert(i);
      EXPECT_EQ(gam.index_of(a.ar_coordinate(a.ar_translate(m))), gam.tau(i));
    }
    EXPECT_EQ(hit.size(), gam.size());
  }
}

TEST(Nakayama, SyzygyExamples) {
  const NakayamaAlgebra a(4, 5);
  EXPECT_EQ(a.omega(M(1, 1)), M(2, 4));
  EXPECT_EQ(a.omega_inv(M(2, 1)), M(2, 4));
  EXPECT_THROW(a.omega(M(1, 5)), std::invalid_argument);
  for (const auto& m : a.nonprojectives()) {
    EXPECT_EQ(a.omega_inv(a.omega(m)), m);
    EXPECT_EQ(a.omega(a.omega_inv(m)), m);
  }
}

TEST(Nakayama, SyzygyIsTheKernelOfTheProjectiveCover) {
  for (const auto& a : {NakayamaAlgebra(3, 4), NakayamaAlgebra(2, 5), NakayamaAlgebra(3, 3)})
    for (const auto& m : a.nonprojectives()) {
      const auto cover = a.projective_cover_map(m);
      const auto p = a.rep({{m.top, a.loewy_length()}});
      std::vector<Matrix<ModP>> kernel;
      for (int v = 0; v < a.e(); ++v) kernel.push_back(nullspace(cover[static_cast<std::size_t>(v)]));
      const auto parts = decompose_submodule(p, a.loewy_length(), kernel);
      EXPECT_EQ(parts, (std::map<SerialModule, int>{{a.omega(m), 1}})) << a.name() << " " << label(m);
    }
}

TEST(Nakayama, CosyzygyIsTheCokernelOfTheInjectiveHull) {
  for (const auto& a : {NakayamaAlgebra(3, 4), NakayamaAlgebra(3, 3)})
    for (const auto& m : a.nonprojectives()) {
      const auto hull = a.injective_hull_map(m);
      const auto i = a.rep({a.injective_hull(m)});
      std::vector<Matrix<ModP>> image;
      for (int v = 0; v < a.e(); ++v) image.push_back(column_basis(hull[static_cast<std::size_t>(v)]));
      const auto parts = decompose_quotient(i, a.loewy_length(), image);
      EXPECT_EQ(parts, (std::map<SerialModule, int>{{a.omega_inv(m), 1}})) << a.name() << " " << label(m);
    }
}

TEST(Nakayama, NakayamaFunctor) {
  const NakayamaAlgebra sym(4, 5);
  for (const auto& m : sym.nonprojectives()) EXPECT_EQ(sym.nu(m), m);
  const NakayamaAlgebra a(3, 3);
  EXPECT_EQ(a.nu(M(1, 1)), M(2, 1));
  EXPECT_EQ(a.nu(M(2, 1)), M(3, 1));
  EXPECT_EQ(a.nu(M(3, 1)), M(1, 1));
  for (const auto& alg : small_algebras())
    for (const auto& m : alg.nonprojectives()) {
      EXPECT_EQ(alg.nu(alg.omega(alg.omega(m))), alg.ar_translate(m)) << alg.name();
      EXPECT_EQ(alg.nu_inv(alg.nu(m)), m);
    }
}

TEST(Nakayama, OrthogonalityAndWeakSms) {
  const NakayamaAlgebra a(4, 5);
  EXPECT_TRUE(a.is_wsms(a.simples()));
  EXPECT_FALSE(a.is_wsms({M(1, 1), M(2, 1), M(3, 1)}));
  EXPECT_TRUE(a.is_wsms({M(1, 3), M(2, 4), M(3, 4), M(4, 1)}));
  EXPECT_FALSE(a.is_orthogonal({M(1, 1), M(1, 2)}));
  EXPECT_FALSE(a.is_orthogonal({M(1, 1), M(1, 1)}));
}

TEST(Nakayama, SimplesGenerateByLength) {
  for (const auto& a : small_algebras()) {
    const auto c = a.layered_closure(a.simples());
    EXPECT_EQ(c.members.size(), a.nonprojectives().size());
    for (const auto& [m, n] : c.layer) EXPECT_EQ(n, m.length) << a.name() << " " << label(m);
  }
}

TEST(Nakayama, ExtensionClosure) {
  const NakayamaAlgebra a(4, 5);
  const auto f = a.ext_closure({M(2, 1), M(3, 1)});
  EXPECT_EQ(f, (ModuleSet{M(2, 1), M(2, 2), M(3, 1)}));
  EXPECT_TRUE(a.ext_closure({}).empty());
  EXPECT_EQ(a.ext_closure(f), f);
}

TEST(Nakayama, SmsAgreesWithWeakSmsOnSmallAlgebras) {
  for (const auto& a : small_algebras())
    for (const auto& cand : a.orthogonal_candidates()) EXPECT_EQ(a.is_sms(cand), a.is_wsms(cand)) << a.name();
}

TEST(Nakayama, SmsAreConfigurationsUnderArCoordinates) {
  for (const auto& a : small_algebras()) {
    const StableTranslationQuiver gam(a.stable_type());
    std::set<Configuration> from_sms;
    for (const auto& s : a.all_sms()) {
      EXPECT_EQ(static_cast<int>(s.size()), a.e());
      Configuration c;
      for (const auto& m : s) c.push_back(gam.index_of(a.ar_coordinate(m)));
      std::sort(c.begin(), c.end());
      from_sms.insert(c);
    }
    const auto configs = enumerate_configurations(gam);
    EXPECT_EQ(from_sms, std::set<Configuration>(configs.begin(), configs.end())) << a.name();
  }
}

TEST(Nakayama, SmsSetIsRotationInvariant) {
  const NakayamaAlgebra a(3, 5);
  const auto all = a.all_sms();
  const std::set<ModuleSet> set(all.begin(), all.end());
  for (const auto& s : all) {
    ModuleSet r;
    for (const auto& m : s) r.push_back({a.wrap(m.top + 1), m.length});
    EXPECT_TRUE(set.count(sorted(r)));
  }
}

TEST(Nakayama, AllSmsBound) {
  EXPECT_THROW(NakayamaAlgebra(5, 6).all_sms(), std::runtime_error);
  EXPECT_NO_THROW(NakayamaAlgebra(2, 3).all_sms(4));
  EXPECT_THROW(NakayamaAlgebra(2, 3).all_sms(3), std::runtime_error);
}

TEST(Approximation, WorkedExample) {
  const NakayamaAlgebra a(4, 5);
  const auto f = a.ext_closure({M(2, 1), M(3, 1)});
  const auto om = a.omega(M(1, 1));
  const auto ap = a.minimal_left_approximation(om, f);
  EXPECT_EQ(ap.target, (std::vector<SerialModule>{M(2, 2)}));
  EXPECT_TRUE(a.is_minimal_left_approximation(om, ap, f));
  EXPECT_EQ(a.cone(om, ap), M(1, 3));
  // No stable maps into F gives the zero approximation.
  const auto zero = a.minimal_left_approximation(a.omega(M(4, 1)), f);
  EXPECT_TRUE(zero.target.empty());
}

TEST(Approximation, MinimalOnEverySmallCase) {
  for (const auto& a : {NakayamaAlgebra(3, 4), NakayamaAlgebra(3, 5), NakayamaAlgebra(2, 5)})
    for (const auto& g : a.nonprojectives()) {
      const auto f = a.ext_closure({g});
      for (const auto& m : a.nonprojectives()) {
        const auto ap = a.minimal_left_approximation(m, f);
        EXPECT_TRUE(a.is_minimal_left_approximation(m, ap, f)) << a.name() << " " << label(m);
      }
    }
}

TEST(Approximation, CompatibleWithNakayamaFunctor) {
  for (const auto& a : {NakayamaAlgebra(3, 3), NakayamaAlgebra(3, 5), NakayamaAlgebra(2, 4)})
    for (const auto& g : a.nonprojectives()) {
      const auto f = a.ext_closure({g});
      const auto nf = a.ext_closure({a.nu(g)});
      for (const auto& m : a.nonprojectives()) {
        const auto ap = a.minimal_left_approximation(m, f);
        const auto nap = a.minimal_left_approximation(a.nu(m), nf);
        ModuleSet moved;
        for (const auto& c : ap.target) moved.push_back(a.nu(c));
        EXPECT_EQ(sorted(moved), sorted(nap.target)) << a.name() << " " << label(m);
      }
    }
}

TEST(Mutation, WorkedExampleAndInverse) {
  const NakayamaAlgebra a(4, 5);
  const auto s = a.simples();
  const auto t = a.mutate_left(s, {M(2, 1), M(3, 1)});
  EXPECT_EQ(t, (ModuleSet{M(1, 3), M(2, 4), M(3, 4), M(4, 1)}));
  EXPECT_TRUE(a.is_sms(t));
  EXPECT_EQ(a.mutate_right(t, {M(2, 4), M(3, 4)}), s);
}

TEST(Mutation, MutatingEverythingIsTheCosyzygy) {
  for (const auto& a : small_algebras())
    for (const auto& s : a.all_sms()) {
      ModuleSet expected;
      for (const auto& m : s) expected.push_back(a.omega_inv(m));
      EXPECT_EQ(a.mutate_left(s, s), sorted(expected)) << a.name();
    }
}

TEST(Mutation, LeftThenRightIsIdentityAndPreservesSms) {
  for (const auto& a : small_algebras()) {
    if (a.nonprojectives().size() > 16) continue;
    for (const auto& s : a.all_sms()) {
      // every union of nu-orbits of s
      std::set<SerialModule> left(s.begin(), s.end());
      std::vector<ModuleSet> orbits;
      while (!left.empty()) {
        ModuleSet orbit;
        SerialModule cur = *left.begin();
        do {
          orbit.push_back(cur);
          left.erase(cur);
          cur = a.nu(cur);
        } while (left.count(cur));
        orbits.push_back(sorted(orbit));
      }
      for (unsigned mask = 1; mask < (1u << orbits.size()); ++mask) {
        ModuleSet x;
        for (std::size_t i = 0; i < orbits.size(); ++i)
          if (mask & (1u << i)) x.insert(x.end(), orbits[i].begin(), orbits[i].end());
        x = sorted(x);
        const auto t = a.mutate_left(s, x);
        ASSERT_TRUE(a.is_sms(t)) << a.name();
        ModuleSet y;
        for (const auto& m : x) y.push_back(a.omega_inv(m));
        EXPECT_EQ(a.mutate_right(t, sorted(y)), s) << a.name();
      }
    }
  }
}

TEST(Mutation, RejectsBadInput) {
  const NakayamaAlgebra a(3, 3);
  EXPECT_THROW(a.mutate_left(a.simples(), {M(1, 1)}), std::invalid_argument);  // not nu-stable
  const NakayamaAlgebra b(4, 5);
  EXPECT_THROW(b.mutate_left({M(1, 1), M(2, 1)}, {M(1, 1)}), std::invalid_argument);  // not an sms
  EXPECT_THROW(b.mutate_left(b.simples(), {M(1, 2)}), std::invalid_argument);         // not a subset
}

TEST(Parsing, AlgebraAndModuleSets) {
  const auto a = parse_nakayama("nakayama:4:5");
  EXPECT_EQ(a.e(), 4);
  EXPECT_EQ(a.loewy_length(), 5);
  EXPECT_THROW(parse_nakayama("nakayama:4"), std::invalid_argument);
  EXPECT_EQ(parse_module_set(a, "simples"), a.simples());
  EXPECT_EQ(parse_module_set(a, "2:4,1:3"), (ModuleSet{M(1, 3), M(2, 4)}));
  EXPECT_THROW(parse_module_set(a, "1:5"), std::invalid_argument);
  EXPECT_THROW(parse_module_set(a, "1:1,1:1"), std::invalid_argument);
  EXPECT_THROW(parse_module_set(a, "x"), std::invalid_argument);
}
