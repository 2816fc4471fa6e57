#pragma once

// Combinatorial configurations of stable translation quivers ZQ/Pi: vertex
// sets C with Hom(e, f) = 0 for e != f in C, Hom(e, e) = k for e in C, and
// such that every vertex maps nontrivially into some member of C.

#include "smsw/dynkin.hpp"
#include "smsw/meshcat.hpp"
#include "smsw/ztquiver.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace smsw {

using Configuration = std::vector<int>;  // sorted vertex indices of the quotient

struct ConfigurationCheck {
  bool ok = false;
  std::string reason;
};

inline ConfigurationCheck is_configuration(const StableTranslationQuiver& gam,
                                           const std::vector<std::vector<int>>& hom, const std::vector<int>& c) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    const auto e = static_cast<std::size_t>(c[a]);
    if (hom[e][e] != 1)
      return {false, "End(" + gam.label(c[a]) + ") has dimension " + std::to_string(hom[e][e])};
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (a == b) continue;
      const auto f = static_cast<std::size_t>(c[b]);
      if (c[a] == c[b]) return {false, "repeated vertex " + gam.label(c[a])};
      if (hom[e][f] != 0) return {false, "Hom(" + gam.label(c[a]) + "," + gam.label(c[b]) + ") != 0"};
    }
  }
  for (std::size_t e = 0; e < gam.size(); ++e) {
    bool covered = false;
    for (int f : c)
      if (hom[e][static_cast<std::size_t>(f)] != 0) covered = true;
    if (!covered) return {false, "vertex " + gam.label(static_cast<int>(e)) + " is not covered"};
  }
  return {true, ""};
}

inline ConfigurationCheck is_configuration(const StableTranslationQuiver& gam, const std::vector<int>& c) {
  return is_configuration(gam, quotient_hom_matrix(gam), c);
}

struct EnumerationOptions {
  int threads = 1;
};

// Backtracking over vertices in (q, p) order. A partial set is extended only
// by vertices orthogonal to it, and abandoned as soon as some uncovered vertex
// has no admissible candidate left.
inline std::vector<Configuration> enumerate_configurations(const StableTranslationQuiver& gam,
                                                           const std::vector<std::vector<int>>& hom,
                                                           EnumerationOptions opts = {}) {
  const int n = static_cast<int>(gam.size());
  const int target = num_simples(gam.type());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& va = gam.vertex(a);
    const auto& vb = gam.vertex(b);
    return std::pair(va.q, va.p) < std::pair(vb.q, vb.p);
  });
  auto ortho = [&](int a, int b) {
    return hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0 &&
           hom[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == 0;
  };
  std::vector<int> eligible;
  for (int v : order)
    if (hom[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] == 1) eligible.push_back(v);
  const auto m = eligible.size();

  // Runs the search with eligible[first] as the smallest chosen element.
  auto search_from = [&](std::size_t first) {
    std::vector<Configuration> found;
    std::vector<int> chosen{eligible[first]};
    auto feasible = [&](std::size_t next) {
      for (int e = 0; e < n; ++e) {
        bool covered = false;
        for (int f : chosen)
          if (hom[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] != 0) {
            covered = true;
            break;
          }
        if (covered) continue;
        bool reachable = false;
        for (std::size_t k = next; k < m && !reachable; ++k) {
          const int f = eligible[k];
          if (hom[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] == 0) continue;
          bool ok = true;
          for (int c : chosen)
            if (!ortho(c, f)) {
              ok = false;
              break;
            }
          reachable = ok;
        }
        if (!reachable) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t next) -> void {
      if (static_cast<int>(chosen.size()) == target) {
        if (feasible(m)) {
          Configuration c = chosen;
          std::sort(c.begin(), c.end());
          found.push_back(std::move(c));
        }
        return;
      }
      if (!feasible(next)) return;
      for (std::size_t k = next; k < m; ++k) {
        if (static_cast<int>(chosen.size() + (m - k)) < target) break;
        const int f = eligible[k];
        bool ok = true;
        for (int c : chosen)
          if (!ortho(c, f)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        chosen.push_back(f);
        self(self, k + 1);
        chosen.pop_back();
      }
    };
    rec(rec, first + 1);
    return found;
  };

  std::vector<Configuration> all;
  if (opts.threads <= 1) {
    for (std::size_t first = 0; first < m; ++first) {
      auto part = search_from(first);
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    for (std::size_t base = 0; base < m; base += static_cast<std::size_t>(opts.threads)) {
      std::vector<std::future<std::vector<Configuration>>> jobs;
      for (std::size_t first = base; first < std::min(m, base + static_cast<std::size_t>(opts.threads)); ++first)
        jobs.push_back(std::async(std::launch::async, search_from, first));
      for (auto& j : jobs) {
        auto part = j.get();
        all.insert(all.end(), part.begin(), part.end());
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

inline std::vector<Configuration> enumerate_configurations(const StableTranslationQuiver& gam,
                                                           EnumerationOptions opts = {}) {
  return enumerate_configurations(gam, quotient_hom_matrix(gam), opts);
}

inline Configuration apply(const QuiverAutomorphism& a, const Configuration& c) {
  Configuration out;
  out.reserve(c.size());
  for (int v : c) out.push_back(a.image[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

struct ConfigurationOrbit {
  Configuration representative;  // lexicographically minimal member
  std::size_t size = 0;
};

inline std::vector<ConfigurationOrbit> orbit_decomposition(const std::vector<Configuration>& configs,
                                                           const std::vector<QuiverAutomorphism>& group) {
  std::map<Configuration, bool> seen;
  for (const auto& c : configs) seen[c] = false;
  std::vector<ConfigurationOrbit> orbits;
  for (auto& [c, done] : seen) {
    if (done) continue;
    std::vector<Configuration> members;
    for (const auto& a : group) members.push_back(apply(a, c));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (const auto& mem : members) {
      auto it = seen.find(mem);
      if (it == seen.end()) throw std::logic_error("automorphism image is not an enumerated configuration");
      it->second = true;
    }
    orbits.push_back({members.front(), members.size()});
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.representative < b.representative; });
  return orbits;
}

inline std::vector<ConfigurationOrbit> orbit_decomposition(const StableTranslationQuiver& gam,
                                                           const std::vector<Configuration>& configs) {
  return orbit_decomposition(configs, automorphisms(gam));
}

// Types whose configurations form a single Aut-orbit: (A_2, s/2, 1),
// (A_n, s/n, 1) with gcd(s, n) = 1, (A_3, s, 2), (D_6, s/3, 1) with 3 not
// dividing s, and (D_4, s, 3).
inline bool in_transitivity_list(const RfsType& t) {
  const int n = t.graph.rank();
  const Frequency& f = t.frequency;
  switch (t.graph.family()) {
    case Family::A:
      if (t.torsion == 1) {
        if (n == 2) return true;
        const Frequency s = f * n;
        return s.denominator() == 1 && std::gcd(s.numerator(), static_cast<std::int64_t>(n)) == 1;
      }
      return t.torsion == 2 && n == 3;
    case Family::D:
      if (t.torsion == 3) return n == 4;
      return t.torsion == 1 && n == 6 && f.denominator() == 3;
    case Family::E:
      return false;
  }
  return false;
}

struct TransitivityEntry {
  RfsType type;
  std::size_t vertices = 0;
  std::size_t configurations = 0;
  std::size_t orbits = 0;
  bool listed = false;
  bool consistent() const { return (orbits == 1) == listed; }
};

// Orbit counts for every valid type with rank <= max_rank, parameter
// s <= max_s and at most max_vertices vertices.
inline std::vector<TransitivityEntry> transitivity_list_check(int max_rank, int max_s, std::size_t max_vertices) {
  std::vector<RfsType> types;
  for (int n = 1; n <= max_rank; ++n)
    for (int s = 1; s <= max_s; ++s) {
      types.push_back({DynkinGraph(Family::A, n), Frequency(s, n), 1, true});
      if (n % 2 == 1 && n >= 3) types.push_back({DynkinGraph(Family::A, n), Frequency(s), 2, true});
      if (n >= 4) {
        types.push_back({DynkinGraph(Family::D, n), Frequency(s), 1, true});
        types.push_back({DynkinGraph(Family::D, n), Frequency(s), 2, true});
        if (n == 4) types.push_back({DynkinGraph(Family::D, n), Frequency(s), 3, true});
        if (n % 3 == 0 && n >= 6 && s % 3 != 0) types.push_back({DynkinGraph(Family::D, n), Frequency(s, 3), 1, true});
      }
      if (n >= 6 && n <= 8) {
        types.push_back({DynkinGraph(Family::E, n), Frequency(s), 1, true});
        if (n == 6) types.push_back({DynkinGraph(Family::E, n), Frequency(s), 2, true});
      }
    }
  std::vector<TransitivityEntry> out;
  for (const auto& t : types) {
    if (!validate_rfs_type(t).valid) continue;
    const auto group = admissible_group(t);
    const auto size = static_cast<std::size_t>(t.graph.rank() * group.r);
    if (size > max_vertices) continue;
    const StableTranslationQuiver gam(t);
    const auto configs = enumerate_configurations(gam);
    const auto orbits = orbit_decomposition(gam, configs);
    out.push_back({t, size, configs.size(), orbits.size(), in_transitivity_list(t)});
  }
  return out;
}

// The full preimage of a configuration with levels in [p_min, p_max].
inline std::vector<ZVertex> lift_configuration(const StableTranslationQuiver& gam, const Configuration& c, int p_min,
                                               int p_max) {
  std::vector<ZVertex> out;
  for (int v : c) {
    auto l = gam.lifts_in_range(v, p_min, p_max);
    out.insert(out.end(), l.begin(), l.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace smsw
