#pragma once

// The sms mutation quiver of a self-injective Nakayama algebra: vertices are
// sms's, arrows are mutations at Nakayama-stable subsets. By default only
// irreducible mutations (at a single nu-orbit) are used.

#include "smsw/nakayama.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace smsw {

enum class Direction { Left, Right };

inline std::string to_string(Direction d) { return d == Direction::Left ? "left" : "right"; }

inline Direction parse_direction(const std::string& s) {
  if (s == "left") return Direction::Left;
  if (s == "right") return Direction::Right;
  throw std::invalid_argument("direction must be left or right, got '" + s + "'");
}

// Partition of S into nu-orbits, each sorted, ordered by smallest member.
inline std::vector<ModuleSet> nu_orbit_partition(const NakayamaAlgebra& a, const ModuleSet& s) {
  std::set<SerialModule> left(s.begin(), s.end());
  std::vector<ModuleSet> parts;
  for (const auto& m : sorted(s)) {
    if (!left.count(m)) continue;
    ModuleSet orbit;
    SerialModule cur = m;
    do {
      if (!left.count(cur)) throw std::invalid_argument("set is not Nakayama-stable");
      orbit.push_back(cur);
      left.erase(cur);
      cur = a.nu(cur);
    } while (cur != m);
    parts.push_back(sorted(orbit));
  }
  return parts;
}

// All nonempty unions of nu-orbits of S.
inline std::vector<ModuleSet> nu_stable_subsets(const NakayamaAlgebra& a, const ModuleSet& s) {
  const auto parts = nu_orbit_partition(a, s);
  if (parts.size() > 20) throw std::runtime_error("too many nu-orbits to enumerate subsets");
  std::vector<ModuleSet> out;
  for (unsigned mask = 1; mask < (1u << parts.size()); ++mask) {
    ModuleSet x;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (mask & (1u << i)) x.insert(x.end(), parts[i].begin(), parts[i].end());
    out.push_back(sorted(x));
  }
  return out;
}

// Orbit label: the top-to-socle columns of its members.
inline std::string orbit_label(const NakayamaAlgebra& a, const ModuleSet& x) {
  std::string out;
  for (const auto& m : x) {
    if (!out.empty()) out += " ";
    out += a.column(m);
  }
  return out;
}

struct MutationArrow {
  int source = 0;
  int target = 0;
  Direction direction = Direction::Left;
  ModuleSet at;       // the mutated Nakayama-stable subset of the source
  std::string label;  // orbit_label(at)
  friend bool operator==(const MutationArrow&, const MutationArrow&) = default;
};

struct MutationQuiver {
  int e = 0;
  int loewy = 0;
  std::vector<ModuleSet> vertices;  // sorted
  std::vector<MutationArrow> arrows;
  friend bool operator==(const MutationQuiver&, const MutationQuiver&) = default;
};

struct MutationQuiverOptions {
  bool left = true;
  bool right = false;
  bool allow_composite = false;
  int max_depth = 64;
  int bound = 24;  // upper limit on e(L-1)
};

inline MutationQuiver build_mutation_quiver(const NakayamaAlgebra& a, const ModuleSet& start,
                                            const MutationQuiverOptions& opts = {}) {
  if (a.e() * (a.loewy_length() - 1) > opts.bound)
    throw std::runtime_error("mutation quiver of " + a.name() + " exceeds the bound " + std::to_string(opts.bound));
  if (!a.is_sms(start)) throw std::invalid_argument("start set is not a simple-minded system");
  std::map<ModuleSet, int> depth;
  std::deque<ModuleSet> frontier;
  struct RawArrow {
    ModuleSet from, to, at;
    Direction dir;
  };
  std::vector<RawArrow> raw;
  depth[sorted(start)] = 0;
  frontier.push_back(sorted(start));
  while (!frontier.empty()) {
    const ModuleSet s = frontier.front();
    frontier.pop_front();
    const int d = depth[s];
    const auto subsets = opts.allow_composite ? nu_stable_subsets(a, s) : nu_orbit_partition(a, s);
    for (const auto& x : subsets) {
      std::vector<std::pair<Direction, ModuleSet>> results;
      if (opts.left) results.emplace_back(Direction::Left, a.mutate_left_unchecked(s, x));
      if (opts.right) results.emplace_back(Direction::Right, a.mutate_right_unchecked(s, x));
      for (auto& [dir, t] : results) {
        raw.push_back({s, t, x, dir});
        if (depth.count(t)) continue;
        if (d + 1 > opts.max_depth)
          throw std::runtime_error("mutation quiver BFS exceeded depth cap " + std::to_string(opts.max_depth));
        depth[t] = d + 1;
        frontier.push_back(t);
      }
    }
  }
  MutationQuiver q;
  q.e = a.e();
  q.loewy = a.loewy_length();
  std::map<ModuleSet, int> index;
  for (const auto& [s, dd] : depth) {
    index[s] = static_cast<int>(q.vertices.size());
    q.vertices.push_back(s);
  }
  for (const auto& r : raw)
    q.arrows.push_back({index.at(r.from), index.at(r.to), r.dir, r.at, orbit_label(a, r.at)});
  std::sort(q.arrows.begin(), q.arrows.end(), [](const MutationArrow& x, const MutationArrow& y) {
    return std::tie(x.source, x.direction, x.at, x.target) < std::tie(y.source, y.direction, y.at, y.target);
  });
  return q;
}

// ---------------------------------------------------------------------------
// Export / import

inline nlohmann::json module_json(const SerialModule& m) { return nlohmann::json::array({m.top, m.length}); }

inline nlohmann::json module_set_json(const ModuleSet& s) {
  auto arr = nlohmann::json::array();
  for (const auto& m : s) arr.push_back(module_json(m));
  return arr;
}

inline ModuleSet module_set_from_json(const nlohmann::json& j) {
  ModuleSet s;
  for (const auto& m : j) s.push_back({m.at(0).get<int>(), m.at(1).get<int>()});
  return s;
}

inline nlohmann::json to_json(const MutationQuiver& q) {
  nlohmann::json j;
  j["schema"] = 1;
  j["algebra"] = "nakayama:" + std::to_string(q.e) + ":" + std::to_string(q.loewy);
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : q.vertices) j["vertices"].push_back(module_set_json(v));
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : q.arrows)
    j["arrows"].push_back({{"source", a.source},
                           {"target", a.target},
                           {"direction", to_string(a.direction)},
                           {"at", module_set_json(a.at)},
                           {"label", a.label}});
  return j;
}

inline MutationQuiver mutation_quiver_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unsupported schema version");
  MutationQuiver q;
  const auto alg = j.at("algebra").get<std::string>();
  if (std::sscanf(alg.c_str(), "nakayama:%d:%d", &q.e, &q.loewy) != 2)
    throw std::invalid_argument("bad algebra field '" + alg + "'");
  for (const auto& v : j.at("vertices")) q.vertices.push_back(module_set_from_json(v));
  for (const auto& a : j.at("arrows"))
    q.arrows.push_back({a.at("source").get<int>(), a.at("target").get<int>(),
                        parse_direction(a.at("direction").get<std::string>()), module_set_from_json(a.at("at")),
                        a.at("label").get<std::string>()});
  return q;
}

inline std::string to_dot(const MutationQuiver& q) {
  const NakayamaAlgebra a(q.e, q.loewy);
  std::ostringstream os;
  os << "digraph sms_mutation {\n";
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    os << "  s" << i << " [label=\"" << orbit_label(a, q.vertices[i]) << "\"];\n";
  for (const auto& arr : q.arrows)
    os << "  s" << arr.source << " -> s" << arr.target << " [label=\"" << (arr.direction == Direction::Left ? "+" : "-")
       << " " << arr.label << "\"];\n";
  os << "}\n";
  return os.str();
}

// Every vertex reachable from every other one.
inline bool is_strongly_connected(const MutationQuiver& q) {
  const auto n = q.vertices.size();
  if (n == 0) return true;
  auto reach = [&](bool forward) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& a : q.arrows)
      adj[static_cast<std::size_t>(forward ? a.source : a.target)].push_back(forward ? a.target : a.source);
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach(true) && reach(false);
}

}  // namespace smsw
