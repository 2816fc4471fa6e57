#pragma once

// Acceptance criteria shared by the acceptance test binary and `smsw check`.
// Each criterion reports pass/fail, a one-line detail and its runtime; a
// criterion that overruns its time limit fails.

#include "smsw/brauer.hpp"
#include "smsw/configurations.hpp"
#include "smsw/dynkin.hpp"
#include "smsw/meshcat.hpp"
#include "smsw/mutation_quiver.hpp"
#include "smsw/nakayama.hpp"
#include "smsw/ztquiver.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace smsw::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.title << " | " << r.detail << " | "
     << r.seconds << " s (limit " << r.limit_seconds << " s)";
  return os.str();
}

namespace detail {

inline CriterionResult timed(int id, std::string title, double limit, const std::function<bool(std::string&)>& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.limit_seconds = limit;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > limit) {
    r.passed = false;
    r.detail += " (time limit exceeded)";
  }
  return r;
}

inline RfsType type_of(Family f, int n, Frequency freq, int t, bool standard = true) {
  return RfsType{DynkinGraph(f, n), freq, t, standard};
}

// Key used by the hand-written classification table.
using TypeKey = std::tuple<char, int, std::int64_t, std::int64_t, int, bool>;

inline TypeKey key_of(char fam, int n, Frequency f, int t, bool standard) {
  return {fam, n, f.numerator(), f.denominator(), t, standard};
}

// The classification list written out member by member, for ranks <= 12 and
// frequencies <= 6. Maps each member to its family letter.
inline std::map<TypeKey, std::string> classification_table() {
  std::map<TypeKey, std::string> table;
  for (int n = 1; n <= 12; ++n) {
    for (int s = 1; s <= 6 * n; ++s) table[key_of('A', n, Frequency(s, n), 1, true)] = "a";
    if (n % 2 == 1 && n >= 3)
      for (int s = 1; s <= 6; ++s) table[key_of('A', n, Frequency(s), 2, true)] = "b";
  }
  for (int n = 4; n <= 12; ++n) {
    for (int s = 1; s <= 6; ++s) {
      table[key_of('D', n, Frequency(s), 1, true)] = "c";
      table[key_of('D', n, Frequency(s), 2, true)] = "e";
    }
    if (n % 3 == 0 && n >= 6) {
      for (int s = 1; s <= 18; ++s)
        if (s % 3 != 0) table[key_of('D', n, Frequency(s, 3), 1, true)] = "d";
      table[key_of('D', n, Frequency(1, 3), 1, false)] = "non-standard";
    }
  }
  for (int s = 1; s <= 6; ++s) table[key_of('D', 4, Frequency(s), 3, true)] = "f";
  for (int n = 6; n <= 8; ++n)
    for (int s = 1; s <= 6; ++s) table[key_of('E', n, Frequency(s), 1, true)] = "g";
  for (int s = 1; s <= 6; ++s) table[key_of('E', 6, Frequency(s), 2, true)] = "h";
  return table;
}

// Whether `lifted` (a set of ZQ vertices covering [lo, hi]) is invariant under
// tau^period where both ends lie in the range.
inline bool tau_power_stable(const std::vector<ZVertex>& lifted, int period, int lo, int hi) {
  const std::set<ZVertex> s(lifted.begin(), lifted.end());
  for (const auto& v : lifted) {
    if (v.p + period <= hi && !s.count({v.p + period, v.q})) return false;
    if (v.p - period >= lo && !s.count({v.p - period, v.q})) return false;
  }
  return true;
}

}  // namespace detail

inline CriterionResult criterion_1_type_table() {
  return detail::timed(1, "classification of RFS types (n <= 12, s <= 6)", 1.0, [](std::string& out) {
    const auto table = detail::classification_table();
    std::vector<std::pair<Family, int>> graphs;
    for (int n = 1; n <= 12; ++n) graphs.emplace_back(Family::A, n);
    for (int n = 4; n <= 12; ++n) graphs.emplace_back(Family::D, n);
    for (int n = 6; n <= 8; ++n) graphs.emplace_back(Family::E, n);
    std::set<Frequency> freqs;
    for (int b = 1; b <= 12; ++b)
      for (int a = 1; a <= 6 * b; ++a) freqs.insert(Frequency(a, b));
    std::size_t checked = 0, false_accept = 0, false_reject = 0, wrong_family = 0;
    for (const auto& [fam, n] : graphs)
      for (const auto& f : freqs)
        for (int t = 1; t <= 3; ++t)
          for (bool standard : {true, false}) {
            const RfsType ty{DynkinGraph(fam, n), f, t, standard};
            const auto v = validate_rfs_type(ty);
            auto it = table.find(detail::key_of(family_letter(fam), n, f, t, standard));
            ++checked;
            if (it == table.end() && v.valid) ++false_accept;
            if (it != table.end() && !v.valid) ++false_reject;
            if (it != table.end() && v.valid && v.family != it->second) ++wrong_family;
          }
    out = std::to_string(checked) + " triples, " + std::to_string(false_accept) + " false accepts, " +
          std::to_string(false_reject) + " false rejects, " + std::to_string(wrong_family) + " wrong families";
    return false_accept == 0 && false_reject == 0 && wrong_family == 0;
  });
}

inline CriterionResult criterion_2_worked_mutation() {
  return detail::timed(2, "left mutation of the simples of N(4,5) at {S2,S3}", 1.0, [](std::string& out) {
    const NakayamaAlgebra a(4, 5);
    const ModuleSet expected{{1, 3}, {2, 4}, {3, 4}, {4, 1}};
    const auto got = a.mutate_left(a.simples(), {{2, 1}, {3, 1}});
    out = "got";
    for (const auto& m : got) out += " " + a.column(m);
    return got == expected;
  });
}

inline CriterionResult criterion_3_orbit_counts() {
  return detail::timed(3, "Aut-orbit counts of configurations", 300.0, [](std::string& out) {
    using detail::type_of;
    const std::vector<std::pair<RfsType, std::size_t>> cases{
        {type_of(Family::A, 2, Frequency(1), 1), 1},    {type_of(Family::A, 1, Frequency(1), 1), 1},
        {type_of(Family::A, 2, Frequency(1, 2), 1), 1}, {type_of(Family::A, 3, Frequency(1, 3), 1), 1},
        {type_of(Family::A, 4, Frequency(1, 4), 1), 1}, {type_of(Family::A, 5, Frequency(1, 5), 1), 1},
        {type_of(Family::A, 3, Frequency(1), 2), 1},    {type_of(Family::A, 5, Frequency(1), 2), 2},
        {type_of(Family::D, 4, Frequency(1), 1), 2},    {type_of(Family::D, 4, Frequency(1), 3), 1},
        {type_of(Family::D, 6, Frequency(1, 3), 1), 1},
    };
    bool ok = true;
    for (const auto& [t, want] : cases) {
      const StableTranslationQuiver gam(t);
      const auto got = orbit_decomposition(gam, enumerate_configurations(gam)).size();
      if (!out.empty()) out += ", ";
      out += format_type(t) + " -> " + std::to_string(got);
      if (got != want) {
        ok = false;
        out += " (want " + std::to_string(want) + ")";
      }
    }
    return ok;
  });
}

inline CriterionResult criterion_4_brauer() {
  return detail::timed(4, "configuration counts of ZA_n/tau^n against Brauer trees", 60.0, [](std::string& out) {
    bool ok = true;
    std::string counts, orbits;
    for (int n = 1; n <= 4; ++n) {
      const StableTranslationQuiver gam(detail::type_of(Family::A, n, Frequency(1), 1));
      const auto configs = enumerate_configurations(gam);
      const auto orb = orbit_decomposition(gam, configs).size();
      const auto trees = count_brauer_trees(n, 1);
      counts += (n > 1 ? " " : "") + std::to_string(configs.size()) + "/" + std::to_string(trees);
      orbits += (n > 1 ? " " : "") + std::to_string(orb) + "/" + std::to_string(trees);
      if (configs.size() != trees) ok = false;
    }
    bool unique_ok = true;
    for (int d = 1; d <= 4; ++d)
      for (int m = 1; m <= 4; ++m) {
        const bool one = count_brauer_trees(d, m) == 1;
        if (one != (d == 1 || (d == 2 && m == 1))) unique_ok = false;
      }
    out = "|Conf|/trees for n=1..4: " + counts + "; Aut-orbits/trees: " + orbits +
          "; count==1 iff d=1 or (d,m)=(2,1): " + (unique_ok ? "yes" : "no");
    return ok && unique_ok;
  });
}

inline CriterionResult criterion_5_backend_equivalence() {
  return detail::timed(5, "sms of N(e,em+1) transported onto configurations", 300.0, [](std::string& out) {
    bool ok = true;
    for (const auto& [e, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {3, 1}, {4, 1}}) {
      const NakayamaAlgebra a(e, e * m + 1);
      const StableTranslationQuiver gam(a.stable_type());
      const auto hom = quotient_hom_matrix(gam);
      const auto configs = enumerate_configurations(gam, hom);
      const auto sms = a.all_sms();
      std::set<Configuration> image;
      bool each_ok = true;
      for (const auto& s : sms) {
        Configuration c;
        for (const auto& mod : s) c.push_back(gam.index_of(a.ar_coordinate(mod)));
        std::sort(c.begin(), c.end());
        if (!is_configuration(gam, hom, c).ok) each_ok = false;
        image.insert(c);
      }
      const bool bijective =
          each_ok && image.size() == sms.size() && image == std::set<Configuration>(configs.begin(), configs.end());
      if (!out.empty()) out += ", ";
      out += a.name() + ": " + std::to_string(sms.size()) + " sms, " + std::to_string(configs.size()) + " conf" +
             (bijective ? "" : " (no bijection)");
      ok = ok && bijective;
    }
    return ok;
  });
}

inline CriterionResult criterion_6_sms_wsms() {
  return detail::timed(6, "is_sms agrees with is_wsms for e(L-1) <= 16", 600.0, [](std::string& out) {
    std::size_t algebras = 0, candidates = 0, disagreements = 0;
    for (int e = 1; e <= 16; ++e)
      for (int l = 2; e * (l - 1) <= 16; ++l) {
        const NakayamaAlgebra a(e, l);
        ++algebras;
        for (const auto& c : a.orthogonal_candidates()) {
          ++candidates;
          if (a.is_sms(c) != a.is_wsms(c)) ++disagreements;
        }
      }
    out = std::to_string(algebras) + " algebras, " + std::to_string(candidates) + " candidates, " +
          std::to_string(disagreements) + " disagreements";
    return disagreements == 0;
  });
}

inline CriterionResult criterion_7_nu_stability() {
  return detail::timed(7, "every sms is Nakayama-stable", 60.0, [](std::string& out) {
    bool ok = true;
    for (const auto& [e, l] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}, {4, 5}, {3, 5}, {2, 3}}) {
      const NakayamaAlgebra a(e, l);
      std::size_t stable = 0;
      const auto all = a.all_sms();
      for (const auto& s : all)
        if (a.is_nu_stable(s) && static_cast<int>(s.size()) == e) ++stable;
      if (!out.empty()) out += ", ";
      out += a.name() + (a.is_symmetric() ? " (symmetric) " : " ") + std::to_string(stable) + "/" +
             std::to_string(all.size());
      ok = ok && stable == all.size() && !all.empty();
    }
    return ok;
  });
}

inline CriterionResult criterion_8_reachability() {
  return detail::timed(8, "left irreducible mutation from the simples reaches every sms", 300.0, [](std::string& out) {
    bool ok = true;
    for (const auto& [e, l] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 5}}) {
      const NakayamaAlgebra a(e, l);
      const auto q = build_mutation_quiver(a, a.simples());
      const auto all = a.all_sms();
      const bool same = q.vertices == all;
      if (!out.empty()) out += ", ";
      out += a.name() + ": " + std::to_string(q.vertices.size()) + " reached of " + std::to_string(all.size());
      ok = ok && same;
    }
    return ok;
  });
}

inline CriterionResult criterion_9_mesh_oracle() {
  return detail::timed(9, "hammock recursion agrees with the mesh-relation oracle", 600.0, [](std::string& out) {
    const std::vector<DynkinGraph> graphs{DynkinGraph(Family::A, 2), DynkinGraph(Family::A, 3), DynkinGraph(Family::A, 4),
                                          DynkinGraph(Family::A, 5), DynkinGraph(Family::D, 4), DynkinGraph(Family::D, 5),
                                          DynkinGraph(Family::E, 6)};
    std::size_t pairs = 0, mismatches = 0, equivariance = 0, band = 0;
    for (const auto& g : graphs) {
      const int h = coxeter_number(g);
      const int p_max = 2 * h + 1;  // window [0, 2h+1]
      std::vector<HomTable> base;
      for (int q = 1; q <= g.rank(); ++q) base.push_back(hom_table_fast(g, {0, q}, p_max));
      for (int p = 0; p <= p_max; ++p)
        for (int q = 1; q <= g.rank(); ++q) {
          const ZVertex x{p, q};
          const auto oracle = hom_table_oracle<Rational>(g, x, p_max);
          const auto fast = hom_table_fast(g, x, p_max);
          for (int pp = 0; pp <= p_max; ++pp)
            for (int qq = 1; qq <= g.rank(); ++qq) {
              const ZVertex y{pp, qq};
              ++pairs;
              if (oracle.at(y) != fast.at(y)) ++mismatches;
              if (oracle.at(y) != 0 && (pp < p || pp > p + h)) ++band;
              // tau-equivariance against the table of the level-0 source
              if (pp >= p && base[static_cast<std::size_t>(q - 1)].at({pp - p, qq}) != fast.at(y)) ++equivariance;
            }
        }
      HammockCache::instance().table(g, {0, 1});  // asserts the outer half of the band is empty
    }
    out = std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches, " +
          std::to_string(equivariance) + " equivariance failures, " + std::to_string(band) + " outside band";
    return mismatches == 0 && equivariance == 0 && band == 0;
  });
}

inline CriterionResult criterion_10_periodicity() {
  return detail::timed(10, "lifted configurations are periodic; counts depend on gcd(s,4)", 120.0, [](std::string& out) {
    using detail::type_of;
    const std::vector<RfsType> instances{
        type_of(Family::A, 1, Frequency(3), 1),    type_of(Family::A, 2, Frequency(1, 2), 1),
        type_of(Family::A, 2, Frequency(1), 1),    type_of(Family::A, 3, Frequency(1), 1),
        type_of(Family::A, 3, Frequency(1), 2),    type_of(Family::A, 4, Frequency(1), 1),
        type_of(Family::A, 4, Frequency(1, 2), 1), type_of(Family::A, 5, Frequency(1), 2),
        type_of(Family::D, 4, Frequency(1), 1),    type_of(Family::D, 4, Frequency(1), 2),
        type_of(Family::D, 4, Frequency(1), 3),    type_of(Family::D, 5, Frequency(1), 1),
        type_of(Family::D, 6, Frequency(1, 3), 1), type_of(Family::D, 6, Frequency(1, 3), 1, false),
    };
    std::size_t lifted = 0, unstable = 0;
    for (const auto& t : instances) {
      const StableTranslationQuiver gam(t);
      const int n = t.graph.rank();
      const int period = t.graph.family() == Family::A ? n : 2 * n - 3;
      const int lo = -2 * gam.period() - period;
      const int hi = 2 * gam.period() + period;
      for (const auto& c : enumerate_configurations(gam)) {
        ++lifted;
        if (!detail::tau_power_stable(lift_configuration(gam, c, lo, hi), period, lo, hi)) ++unstable;
      }
    }
    std::map<int, std::set<std::size_t>> by_gcd;
    std::string counts;
    for (int s : {1, 2, 3, 4, 6}) {
      const StableTranslationQuiver gam(type_of(Family::A, 4, Frequency(s, 4), 1));
      const auto c = enumerate_configurations(gam).size();
      by_gcd[std::gcd(s, 4)].insert(c);
      counts += (counts.empty() ? "" : " ") + std::string("s=") + std::to_string(s) + ":" + std::to_string(c);
    }
    bool gcd_ok = true;
    for (const auto& [d, cs] : by_gcd)
      if (cs.size() != 1) gcd_ok = false;
    out = std::to_string(lifted) + " lifted configurations, " + std::to_string(unstable) + " not periodic; (A4,s/4,1) " +
          counts;
    return unstable == 0 && gcd_ok;
  });
}

inline std::vector<std::function<CriterionResult()>> all_criteria() {
  return {criterion_1_type_table,       criterion_2_worked_mutation, criterion_3_orbit_counts, criterion_4_brauer,
          criterion_5_backend_equivalence, criterion_6_sms_wsms,      criterion_7_nu_stability, criterion_8_reachability,
          criterion_9_mesh_oracle,      criterion_10_periodicity};
}

}  // namespace smsw::acceptance
