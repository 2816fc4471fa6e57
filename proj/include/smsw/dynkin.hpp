#pragma once

// Dynkin tree classes, their Coxeter numbers and graph automorphisms, and the
// classification triples (tree class, frequency, torsion order) of
// representation-finite self-injective algebras.

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smsw {

using Frequency = boost::rational<std::int64_t>;

enum class Family { A, D, E };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

inline Family parse_family(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'D': return Family::D;
    case 'E': return Family::E;
    default: throw std::invalid_argument(std::string("unknown Dynkin family '") + c + "'");
  }
}

struct Arrow {
  int from;
  int to;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A Dynkin tree with a fixed orientation. Nodes are numbered 1..rank.
//
//   A_n : path 1 - 2 - ... - n, arrows q+1 -> q.
//   D_n : spine 1 - ... - (n-2), fork tips n-1 and n on node n-2;
//         arrows i -> i+1 along the spine, n-2 -> n-1, n-2 -> n.
//   E_n : Bourbaki numbering, chain 1-3-4-5-6(-7-8) with 2 on node 4;
//         every arrow points towards node 4.
class DynkinGraph {
 public:
  DynkinGraph(Family family, int rank) : family_(family), rank_(rank) {
    switch (family) {
      case Family::A:
        if (rank < 1) throw std::invalid_argument("A_n requires n >= 1");
        for (int q = 1; q < rank; ++q) arrows_.push_back({q + 1, q});
        break;
      case Family::D:
        if (rank < 4) throw std::invalid_argument("D_n requires n >= 4");
        for (int i = 1; i + 1 <= rank - 2; ++i) arrows_.push_back({i, i + 1});
        arrows_.push_back({rank - 2, rank - 1});
        arrows_.push_back({rank - 2, rank});
        break;
      case Family::E:
        if (rank < 6 || rank > 8) throw std::invalid_argument("E_n requires n in {6,7,8}");
        arrows_ = {{1, 3}, {3, 4}, {2, 4}, {5, 4}, {6, 5}};
        if (rank >= 7) arrows_.push_back({7, 6});
        if (rank == 8) arrows_.push_back({8, 7});
        break;
    }
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_arrow(int from, int to) const {
    for (const auto& a : arrows_)
      if (a.from == from && a.to == to) return true;
    return false;
  }

  bool adjacent(int a, int b) const { return has_arrow(a, b) || has_arrow(b, a); }

  std::string name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

  friend bool operator==(const DynkinGraph& a, const DynkinGraph& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

 private:
  Family family_;
  int rank_;
  std::vector<Arrow> arrows_;
};

inline int coxeter_number(const DynkinGraph& g) {
  switch (g.family()) {
    case Family::A: return g.rank() + 1;
    case Family::D: return 2 * g.rank() - 2;
    case Family::E: return g.rank() == 6 ? 12 : g.rank() == 7 ? 18 : 30;
  }
  return 0;
}

// A permutation of the nodes of a Dynkin graph preserving its edges
// (ignoring orientation). image[q-1] is the image of node q.
struct GraphAutomorphism {
  std::vector<int> image;
  int order = 1;

  int operator()(int q) const { return image.at(static_cast<std::size_t>(q - 1)); }

  static GraphAutomorphism identity(int rank) {
    GraphAutomorphism z;
    z.image.resize(static_cast<std::size_t>(rank));
    std::iota(z.image.begin(), z.image.end(), 1);
    return z;
  }

  bool preserves_edges(const DynkinGraph& g) const {
    for (const auto& a : g.arrows())
      if (!g.adjacent((*this)(a.from), (*this)(a.to))) return false;
    return true;
  }

  // Smallest k >= 1 with this^k = id.
  int compute_order() const {
    std::vector<int> cur = image;
    for (int k = 1; k <= 64; ++k) {
      bool id = true;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (cur[i] != static_cast<int>(i) + 1) id = false;
      if (id) return k;
      for (auto& c : cur) c = image[static_cast<std::size_t>(c - 1)];
    }
    return -1;
  }
};

struct RfsType {
  DynkinGraph graph;
  Frequency frequency;
  int torsion = 1;
  bool standard = true;

  friend bool operator==(const RfsType& a, const RfsType& b) {
    return a.graph == b.graph && a.frequency == b.frequency && a.torsion == b.torsion &&
           a.standard == b.standard;
  }
};

struct TypeValidation {
  bool valid = false;
  std::string family;  // "a".."h", or "non-standard"
  std::string reason;
};

namespace detail {
inline bool is_integer(const Frequency& f) { return f.denominator() == 1; }
inline TypeValidation accept(std::string fam) { return {true, std::move(fam), ""}; }
inline TypeValidation reject(std::string why) { return {false, "", std::move(why)}; }
}  // namespace detail

// Membership in the classification list of standard types (a)-(h), plus the
// non-standard family (D_{3m}, 1/3, 1).
inline TypeValidation validate_rfs_type(const RfsType& t) {
  using detail::accept;
  using detail::is_integer;
  using detail::reject;
  const int n = t.graph.rank();
  const Frequency& f = t.frequency;
  if (f <= Frequency(0)) return reject("frequency must be positive");
  if (t.torsion < 1 || t.torsion > 3) return reject("torsion order must be 1, 2 or 3");

  if (!t.standard) {
    if (t.graph.family() == Family::D && n % 3 == 0 && n >= 6 && f == Frequency(1, 3) && t.torsion == 1)
      return accept("non-standard");
    return reject("non-standard types are exactly (D_3m, 1/3, 1) with m >= 2");
  }

  switch (t.graph.family()) {
    case Family::A:
      if (t.torsion == 1) {
        if (!is_integer(f * n)) return reject("(A_n, s/n, 1) requires n*f to be a positive integer");
        return accept("a");
      }
      if (t.torsion == 2) {
        if (n % 2 == 0 || n < 3) return reject("torsion 2 on A_n requires n = 2p+1 odd with p >= 1");
        if (!is_integer(f)) return reject("(A_2p+1, s, 2) requires an integral frequency");
        return accept("b");
      }
      return reject("torsion 3 only occurs for D_4");
    case Family::D:
      if (t.torsion == 1) {
        if (is_integer(f)) return accept("c");
        if (f.denominator() != 3) return reject("fractional frequency of D_n must have denominator 3");
        if (n % 3 != 0) return reject("(D_3m, s/3, 1) requires n = 3m");
        if (n < 6) return reject("(D_3m, s/3, 1) requires m >= 2");
        return accept("d");
      }
      if (!is_integer(f)) return reject("torsion > 1 on D_n requires an integral frequency");
      if (t.torsion == 2) return accept("e");
      if (n != 4) return reject("torsion 3 only occurs for D_4");
      return accept("f");
    case Family::E:
      if (!is_integer(f)) return reject("E-types require an integral frequency");
      if (t.torsion == 1) return accept("g");
      if (t.torsion == 2) {
        if (n != 6) return reject("torsion 2 on E-types only occurs for E_6");
        return accept("h");
      }
      return reject("torsion 3 only occurs for D_4");
  }
  return reject("unknown family");
}

inline void require_valid(const RfsType& t) {
  auto v = validate_rfs_type(t);
  if (!v.valid) throw std::invalid_argument("invalid RFS type: " + v.reason);
}

inline bool is_symmetric_type(const RfsType& t) {
  require_valid(t);
  const int n = t.graph.rank();
  if (t.torsion != 1) return false;
  switch (t.graph.family()) {
    case Family::A: {
      // f = s/n with s | n.
      const Frequency s = t.frequency * n;
      return n % s.numerator() == 0;
    }
    case Family::D:
      if (t.frequency == Frequency(1, 3)) return true;  // (D_3m, 1/3, 1), both variants
      return t.frequency == Frequency(1);
    case Family::E:
      return t.frequency == Frequency(1);
  }
  return false;
}

inline int num_simples(const RfsType& t) {
  require_valid(t);
  const Frequency x = t.frequency * t.graph.rank();
  return static_cast<int>(x.numerator());
}

struct AdmissibleGroup {
  int r = 0;
  GraphAutomorphism zeta;
};

// The nontrivial graph automorphism of order `order` used for the torsion.
inline GraphAutomorphism torsion_automorphism(const DynkinGraph& g, int order) {
  auto z = GraphAutomorphism::identity(g.rank());
  const int n = g.rank();
  if (order == 1) return z;
  if (order == 2) {
    switch (g.family()) {
      case Family::A:
        for (int q = 1; q <= n; ++q) z.image[static_cast<std::size_t>(q - 1)] = n + 1 - q;
        break;
      case Family::D:
        std::swap(z.image[static_cast<std::size_t>(n - 2)], z.image[static_cast<std::size_t>(n - 1)]);
        break;
      case Family::E:
        if (n != 6) throw std::invalid_argument("no order-2 automorphism on " + g.name());
        z.image = {6, 2, 5, 4, 3, 1};
        break;
    }
  } else if (order == 3) {
    if (g.family() != Family::D || n != 4) throw std::invalid_argument("order-3 automorphism exists only on D4");
    // Arms 1, 3, 4 around the centre 2: 1 -> 3 -> 4 -> 1.
    z.image = {3, 2, 4, 1};
  } else {
    throw std::invalid_argument("torsion order must be 1, 2 or 3");
  }
  z.order = z.compute_order();
  if (z.order != order || !z.preserves_edges(g))
    throw std::logic_error("torsion automorphism construction failed for " + g.name());
  return z;
}

inline AdmissibleGroup admissible_group(const RfsType& t) {
  require_valid(t);
  const Frequency r = t.frequency * (coxeter_number(t.graph) - 1);
  if (r.denominator() != 1) throw std::logic_error("non-integral r");
  return {static_cast<int>(r.numerator()), torsion_automorphism(t.graph, t.torsion)};
}

inline std::string format_frequency(const Frequency& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

inline Frequency parse_frequency(const std::string& s) {
  static const std::regex re(R"(^(\d+)(?:/(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad frequency '" + s + "'");
  const std::int64_t num = std::stoll(m[1]);
  const std::int64_t den = m[2].matched ? std::stoll(m[2]) : 1;
  if (den == 0) throw std::invalid_argument("zero denominator in frequency '" + s + "'");
  return Frequency(num, den);
}

// "A:5/f=1/t=2", "D:6/f=1/3/t=1", optionally suffixed "/nonstandard".
inline std::string format_type(const RfsType& t) {
  std::string out = std::string(1, family_letter(t.graph.family())) + ":" + std::to_string(t.graph.rank()) +
                    "/f=" + format_frequency(t.frequency) + "/t=" + std::to_string(t.torsion);
  if (!t.standard) out += "/nonstandard";
  return out;
}

inline RfsType parse_type(const std::string& s) {
  static const std::regex re(R"(^([ADE]):(\d+)/f=(\d+(?:/\d+)?)/t=(\d+)(/nonstandard)?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad type string '" + s + "'");
  DynkinGraph g(parse_family(m[1].str()[0]), std::stoi(m[2]));
  return RfsType{g, parse_frequency(m[3]), std::stoi(m[4]), !m[5].matched};
}

}  // namespace smsw
