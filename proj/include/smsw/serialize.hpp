#pragma once

// JSON / TSV / DOT renderings. All numbers are exact; frequencies are strings.
// Every top-level JSON document carries "schema": 1.

#include "smsw/configurations.hpp"
#include "smsw/dynkin.hpp"
#include "smsw/meshcat.hpp"
#include "smsw/ztquiver.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace smsw {

using nlohmann::json;

inline json to_json(const RfsType& t) {
  json j{{"family", std::string(1, family_letter(t.graph.family()))},
         {"rank", t.graph.rank()},
         {"frequency", format_frequency(t.frequency)},
         {"torsion", t.torsion}};
  if (!t.standard) j["standard"] = false;
  return j;
}

inline RfsType rfs_type_from_json(const json& j) {
  const auto fam = j.at("family").get<std::string>();
  if (fam.size() != 1) throw std::invalid_argument("bad family '" + fam + "'");
  DynkinGraph g(parse_family(fam[0]), j.at("rank").get<int>());
  return RfsType{g, parse_frequency(j.at("frequency").get<std::string>()), j.at("torsion").get<int>(),
                 j.value("standard", true)};
}

inline json vertex_json(const ZVertex& v) { return json::array({v.p, v.q}); }

inline json to_json(const StableTranslationQuiver& gam) {
  json j;
  j["schema"] = 1;
  j["type"] = to_json(gam.type());
  j["r"] = gam.r();
  j["vertices"] = json::array();
  for (const auto& v : gam.vertices()) j["vertices"].push_back(vertex_json(v));
  j["arrows"] = json::array();
  for (const auto& [a, b] : gam.arrows()) j["arrows"].push_back(json::array({a, b}));
  j["tau"] = gam.tau_permutation();
  return j;
}

inline std::string to_dot(const StableTranslationQuiver& gam) {
  std::ostringstream os;
  os << "digraph \"" << format_type(gam.type()) << "\" {\n";
  for (std::size_t i = 0; i < gam.size(); ++i) os << "  v" << i << " [label=\"" << gam.label(static_cast<int>(i)) << "\"];\n";
  for (const auto& [a, b] : gam.arrows()) os << "  v" << a << " -> v" << b << ";\n";
  for (std::size_t i = 0; i < gam.size(); ++i)
    os << "  v" << i << " -> v" << gam.tau(static_cast<int>(i)) << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

inline json configuration_json(const StableTranslationQuiver& gam, const Configuration& c) {
  json arr = json::array();
  for (int v : c) arr.push_back(vertex_json(gam.vertex(v)));
  return arr;
}

inline json configurations_json(const StableTranslationQuiver& gam, const std::vector<Configuration>& configs,
                                 const std::vector<ConfigurationOrbit>* orbits = nullptr) {
  json j;
  j["schema"] = 1;
  j["type"] = to_json(gam.type());
  j["count"] = configs.size();
  j["configurations"] = json::array();
  for (const auto& c : configs) j["configurations"].push_back(configuration_json(gam, c));
  if (orbits != nullptr) {
    j["orbits"] = json::array();
    for (const auto& o : *orbits)
      j["orbits"].push_back({{"representative", configuration_json(gam, o.representative)}, {"size", o.size}});
  }
  return j;
}

// Vertex indices of a JSON configuration ([[p,q],...]) in `gam`.
inline Configuration configuration_from_json(const StableTranslationQuiver& gam, const json& j) {
  Configuration c;
  for (const auto& v : j) c.push_back(gam.index_of({v.at(0).get<int>(), v.at(1).get<int>()}));
  std::sort(c.begin(), c.end());
  return c;
}

// One configuration per line, vertices as p,q separated by tabs.
inline std::string configurations_tsv(const StableTranslationQuiver& gam, const std::vector<Configuration>& configs) {
  std::ostringstream os;
  for (const auto& c : configs) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& v = gam.vertex(c[k]);
      os << (k ? "\t" : "") << v.p << ',' << v.q;
    }
    os << '\n';
  }
  return os.str();
}

// Nonzero entries of the quotient hom matrix.
inline std::string quotient_hom_tsv(const StableTranslationQuiver& gam) {
  const auto h = quotient_hom_matrix(gam);
  std::ostringstream os;
  os << "source\ttarget\tdim\n";
  for (std::size_t e = 0; e < gam.size(); ++e)
    for (std::size_t f = 0; f < gam.size(); ++f)
      if (h[e][f] != 0) os << gam.label(static_cast<int>(e)) << '\t' << gam.label(static_cast<int>(f)) << '\t' << h[e][f] << '\n';
  return os.str();
}

// Nonzero entries of a hammock table Hom(x, -) in ZQ.
inline std::string hom_table_tsv(const HomTable& t) {
  std::ostringstream os;
  os << "p\tq\tdim\n";
  for (int p = t.p_min; p <= t.p_max; ++p)
    for (int q = 1; q <= t.rank; ++q)
      if (const int d = t.at({p, q}); d != 0) os << p << '\t' << q << '\t' << d << '\n';
  return os.str();
}

}  // namespace smsw
