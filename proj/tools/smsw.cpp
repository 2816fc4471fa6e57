// smsw: command-line front end.
//
// Exit codes: 0 success, 1 computation error, 2 invalid arguments.

#include "smsw/acceptance.hpp"
#include "smsw/brauer.hpp"
#include "smsw/configurations.hpp"
#include "smsw/dynkin.hpp"
#include "smsw/meshcat.hpp"
#include "smsw/mutation_quiver.hpp"
#include "smsw/nakayama.hpp"
#include "smsw/serialize.hpp"
#include "smsw/ztquiver.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace smsw;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

RfsType parse_type_arg(const std::string& s) {
  try {
    return parse_type(s);
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
}

RfsType checked_type(const std::string& s) {
  const RfsType t = parse_type_arg(s);
  const auto v = validate_rfs_type(t);
  if (!v.valid) throw UsageError("invalid RFS type " + s + ": " + v.reason);
  return t;
}

std::string module_line(const NakayamaAlgebra& a, const ModuleSet& s) {
  std::string labels, columns;
  for (const auto& m : s) {
    labels += (labels.empty() ? "" : " ") + label(m);
    columns += (columns.empty() ? "" : " ") + a.column(m);
  }
  return labels + "\t" + columns;
}

int run_classify(const std::string& type_str) {
  const RfsType t = parse_type_arg(type_str);
  const auto v = validate_rfs_type(t);
  if (!v.valid) {
    std::cout << "invalid, " << v.reason << "\n";
    return 0;
  }
  const auto g = admissible_group(t);
  std::cout << "valid, family (" << v.family << "), simples=" << num_simples(t) << ", r=" << g.r
            << (is_symmetric_type(t) ? ", symmetric" : "") << "\n";
  return 0;
}

int run_hom(const std::string& type_str, const std::string& graph_str, const std::string& source, bool oracle) {
  if (!type_str.empty()) {
    const StableTranslationQuiver gam(checked_type(type_str));
    std::cout << quotient_hom_tsv(gam);
    return 0;
  }
  static const std::regex graph_re(R"(^([ADE]):?(\d+)$)");
  std::smatch m;
  if (!std::regex_match(graph_str, m, graph_re)) throw UsageError("bad graph '" + graph_str + "', expected e.g. D4");
  const int rank = std::stoi(m[2]);
  const Family fam = parse_family(m[1].str()[0]);
  if ((fam == Family::D && rank < 4) || (fam == Family::E && (rank < 6 || rank > 8)) || rank < 1)
    throw UsageError("no Dynkin graph " + graph_str);
  const DynkinGraph g(fam, rank);
  static const std::regex src_re(R"(^(-?\d+),(\d+)$)");
  std::smatch s;
  if (!std::regex_match(source, s, src_re)) throw UsageError("bad source '" + source + "', expected p,q");
  const ZVertex x{std::stoi(s[1]), std::stoi(s[2])};
  if (x.q < 1 || x.q > rank) throw UsageError("node " + std::to_string(x.q) + " not in " + g.name());
  const int last = x.p + support_band(g);
  const HomTable t = oracle ? hom_table_oracle<Rational>(g, x, last) : hom_table_fast(g, x, last);
  std::cout << hom_table_tsv(t);
  return 0;
}

int run_enumerate(const std::string& type_str, const std::string& format, int threads) {
  const StableTranslationQuiver gam(checked_type(type_str));
  const auto configs = enumerate_configurations(gam, EnumerationOptions{threads});
  if (format == "tsv")
    std::cout << configurations_tsv(gam, configs);
  else
    std::cout << configurations_json(gam, configs).dump(2) << "\n";
  return 0;
}

int run_orbits(const std::string& type_str, const std::string& format, int threads) {
  const StableTranslationQuiver gam(checked_type(type_str));
  const auto configs = enumerate_configurations(gam, EnumerationOptions{threads});
  const auto orbits = orbit_decomposition(gam, configs);
  if (format == "json") {
    std::cout << configurations_json(gam, configs, &orbits).dump(2) << "\n";
    return 0;
  }
  std::cout << orbits.size() << (orbits.size() == 1 ? " orbit" : " orbits") << "\n";
  for (const auto& o : orbits) {
    std::cout << o.size;
    for (int v : o.representative) std::cout << '\t' << gam.label(v);
    std::cout << "\n";
  }
  return 0;
}

int run_brauer(int edges, int multiplicity, bool marked_leaf) {
  if (edges < 1 || multiplicity < 1) throw UsageError("edges and multiplicity must be >= 1");
  std::cout << (marked_leaf ? count_brauer_trees_marked_leaf(edges) : count_brauer_trees(edges, multiplicity)) << "\n";
  return 0;
}

NakayamaAlgebra checked_algebra(const std::string& s) {
  try {
    return parse_nakayama(s);
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
}

ModuleSet checked_modules(const NakayamaAlgebra& a, const std::string& s) {
  try {
    return parse_module_set(a, s);
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
}

int run_sms(const std::string& alg, bool list, const std::string& format, int bound) {
  const auto a = checked_algebra(alg);
  const auto all = a.all_sms(bound);
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["algebra"] = a.name();
    j["count"] = all.size();
    j["sms"] = json::array();
    if (list)
      for (const auto& s : all) j["sms"].push_back(module_set_json(s));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << all.size() << " sms\n";
  if (list)
    for (const auto& s : all) std::cout << module_line(a, s) << "\n";
  return 0;
}

int run_mutate(const std::string& alg, const std::string& sms, const std::string& at, const std::string& dir,
               bool composite) {
  const auto a = checked_algebra(alg);
  const auto s = checked_modules(a, sms);
  ModuleSet x;
  std::stringstream ss(at);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int pos = 0;
    try {
      pos = std::stoi(tok);
    } catch (const std::exception&) {
      throw UsageError("bad position '" + tok + "' in --at");
    }
    if (pos < 1 || pos > static_cast<int>(s.size())) throw UsageError("position " + tok + " outside the sms");
    x.push_back(s[static_cast<std::size_t>(pos - 1)]);
  }
  x = sorted(x);
  x.erase(std::unique(x.begin(), x.end()), x.end());
  if (x.empty()) throw UsageError("--at selects nothing");
  if (!a.is_nu_stable(x)) throw UsageError("the selected subset is not Nakayama-stable");
  if (!composite && nu_orbit_partition(a, x).size() != 1)
    throw UsageError("the selected subset is a union of several nu-orbits; pass --allow-composite");
  if (!a.is_sms(s)) throw UsageError("--sms is not a simple-minded system of " + a.name());
  const Direction d = parse_direction(dir);
  const auto out = d == Direction::Left ? a.mutate_left(s, x) : a.mutate_right(s, x);
  std::cout << module_line(a, out) << "\n";
  return 0;
}

int run_quiver(const std::string& alg, const std::string& start, const std::string& dir, const std::string& out,
               bool composite, int max_depth, int bound) {
  const auto a = checked_algebra(alg);
  const auto s = checked_modules(a, start);
  MutationQuiverOptions opts;
  opts.left = dir == "left" || dir == "both";
  opts.right = dir == "right" || dir == "both";
  opts.allow_composite = composite;
  opts.max_depth = max_depth;
  opts.bound = bound;
  if (!a.is_sms(s)) throw UsageError("--start is not a simple-minded system of " + a.name());
  const auto q = build_mutation_quiver(a, s, opts);
  if (out == "json")
    std::cout << to_json(q).dump(2) << "\n";
  else
    std::cout << to_dot(q);
  return 0;
}

int run_check(int only) {
  bool ok = true;
  const auto criteria = acceptance::all_criteria();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    const auto r = criteria[i]();
    std::cout << acceptance::format_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simple-minded systems, configurations and mutation"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for enumeration")->check(CLI::Range(1, 256));

  std::string type_str, graph_str, source = "0,1", format = "json", alg, sms = "simples", at, dir = "left",
                                   out = "dot";
  bool oracle = false, list = false, marked_leaf = false, composite = false;
  int edges = 1, multiplicity = 1, max_depth = 64, bound = 24, criterion = 0;

  auto* classify = app.add_subcommand("classify", "validate an RFS type such as A:5/f=1/t=2");
  classify->add_option("type", type_str, "type string")->required();

  auto* hom = app.add_subcommand("hom", "hom dimensions as TSV");
  auto* hom_type = hom->add_option("--type", type_str, "quotient quiver type");
  auto* hom_graph = hom->add_option("--graph", graph_str, "Dynkin graph for a hammock in ZQ, e.g. D4");
  hom_type->excludes(hom_graph);
  hom->add_option("--source", source, "source vertex p,q for --graph");
  hom->add_flag("--oracle", oracle, "use the mesh-relation linear algebra instead of the recursion");

  auto* enumerate = app.add_subcommand("enumerate", "list all configurations");
  enumerate->add_option("--type", type_str)->required();
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  auto* orbits = app.add_subcommand("orbits", "Aut-orbits of configurations");
  orbits->add_option("--type", type_str)->required();
  auto* orbits_format = orbits->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* brauer = app.add_subcommand("brauer", "count Brauer trees");
  brauer->add_option("--edges", edges)->required();
  brauer->add_option("--multiplicity", multiplicity);
  brauer->add_flag("--marked-leaf", marked_leaf, "multiplicity-1 trees with a chosen extremal vertex");

  auto* sms_cmd = app.add_subcommand("sms", "simple-minded systems of a Nakayama algebra");
  sms_cmd->add_option("--algebra", alg, "nakayama:E:L")->required();
  sms_cmd->add_flag("--list", list);
  auto* sms_format = sms_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  sms_cmd->add_option("--bound", bound, "largest e(L-1) accepted");

  auto* mutate = app.add_subcommand("mutate", "mutate an sms");
  mutate->add_option("--algebra", alg)->required();
  mutate->add_option("--sms", sms, "simples or top:length,...");
  mutate->add_option("--at", at, "1-based positions in the sorted sms")->required();
  mutate->add_option("--dir", dir)->check(CLI::IsMember({"left", "right"}));
  mutate->add_flag("--allow-composite", composite, "allow unions of several nu-orbits");

  auto* quiver = app.add_subcommand("quiver", "sms mutation quiver");
  quiver->add_option("--algebra", alg)->required();
  quiver->add_option("--start", sms, "simples or top:length,...");
  quiver->add_option("--dir", dir)->check(CLI::IsMember({"left", "right", "both"}));
  quiver->add_option("--out", out)->check(CLI::IsMember({"dot", "json"}));
  quiver->add_flag("--allow-composite", composite);
  quiver->add_option("--max-depth", max_depth);
  quiver->add_option("--bound", bound);

  auto* check = app.add_subcommand("check", "run the acceptance suite");
  check->add_option("--criterion", criterion, "run a single criterion")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*classify) return run_classify(type_str);
    if (*hom) {
      if (type_str.empty() && graph_str.empty()) throw UsageError("hom needs --type or --graph");
      return run_hom(type_str, graph_str, source, oracle);
    }
    if (*enumerate) return run_enumerate(type_str, format, threads);
    if (*orbits) return run_orbits(type_str, orbits_format->count() ? format : "text", threads);
    if (*brauer) return run_brauer(edges, multiplicity, marked_leaf);
    if (*sms_cmd) return run_sms(alg, list, sms_format->count() ? format : "text", bound);
    if (*mutate) return run_mutate(alg, sms, at, dir, composite);
    if (*quiver) return run_quiver(alg, sms, dir, out, composite, max_depth, bound);
    if (*check) return run_check(criterion);
  } catch (const UsageError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const WindowTooSmall& e) {
    std::cerr << "error: window: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: computation: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
