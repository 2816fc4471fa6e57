#pragma once

// An explicit model of mod A and its stable category for the self-injective
// Nakayama algebra N(e, L): the cyclic quiver 1 -> 2 -> ... -> e -> 1 modulo
// all paths of length L.
//
// Indecomposables are the uniserial modules M(t, l) with top S_t and
// composition factors t, t+1, ..., t+l-1 (mod e); M(t, L) = P(t) is
// projective-injective. Modules are handled as quiver representations
// (a vector space per vertex and a matrix per arrow), and everything below is
// computed by linear algebra on those representations: Hom spaces by solving
// the commutativity equations, stable Homs by quotienting out the maps that
// factor through a projective cover, and decompositions of kernels and
// cokernels from the ranks of path maps.

#include "smsw/dynkin.hpp"
#include "smsw/linalg.hpp"
#include "smsw/ztquiver.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smsw {

struct SerialModule {
  int top = 1;     // 1..e
  int length = 1;  // 1..L
  friend auto operator<=>(const SerialModule&, const SerialModule&) = default;
};

using ModuleSet = std::vector<SerialModule>;  // kept sorted

inline ModuleSet sorted(ModuleSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

inline std::string label(const SerialModule& m) {
  return "M(" + std::to_string(m.top) + "," + std::to_string(m.length) + ")";
}

// ---------------------------------------------------------------------------
// Representations

// A direct sum of uniserial modules, as a representation of the cyclic quiver.
// Vertices are 0-based here (vertex v carries S_{v+1}).
template <typename F>
class ModuleRep {
 public:
  ModuleRep(int e, std::vector<SerialModule> summands) : e_(e), summands_(std::move(summands)) {
    dim_.assign(static_cast<std::size_t>(e_), 0);
    local_.resize(summands_.size());
    for (std::size_t s = 0; s < summands_.size(); ++s)
      for (int k = 0; k < summands_[s].length; ++k) {
        const int v = vertex_of(s, k);
        local_[s].push_back(dim_[static_cast<std::size_t>(v)]++);
      }
    for (int v = 0; v < e_; ++v) {
      const int w = (v + 1) % e_;
      Matrix<F> a(static_cast<std::size_t>(dim(w)), static_cast<std::size_t>(dim(v)));
      for (std::size_t s = 0; s < summands_.size(); ++s)
        for (int k = 0; k + 1 < summands_[s].length; ++k)
          if (vertex_of(s, k) == v) a(static_cast<std::size_t>(local_[s][static_cast<std::size_t>(k + 1)]), static_cast<std::size_t>(local_[s][static_cast<std::size_t>(k)])) = F(1);
      arrows_.push_back(std::move(a));
    }
  }

  int e() const { return e_; }
  int dim(int v) const { return dim_[static_cast<std::size_t>(v)]; }
  int total_dim() const {
    int d = 0;
    for (int x : dim_) d += x;
    return d;
  }
  const std::vector<SerialModule>& summands() const { return summands_; }
  const Matrix<F>& arrow(int v) const { return arrows_[static_cast<std::size_t>(v)]; }

  int vertex_of(std::size_t s, int k) const { return (summands_[s].top - 1 + k) % e_; }
  // Local coordinate, at its vertex, of basis vector k of summand s.
  int local(std::size_t s, int k) const { return local_[s][static_cast<std::size_t>(k)]; }

  // Path map of length k starting at vertex v.
  Matrix<F> path(int v, int k) const {
    Matrix<F> m = Matrix<F>::identity(static_cast<std::size_t>(dim(v)));
    for (int i = 0; i < k; ++i) m = arrow((v + i) % e_) * m;
    return m;
  }

 private:
  int e_;
  std::vector<SerialModule> summands_;
  std::vector<int> dim_;
  std::vector<std::vector<int>> local_;
  std::vector<Matrix<F>> arrows_;
};

// A module homomorphism: one matrix per vertex, target dim x source dim.
template <typename F>
using ModuleMap = std::vector<Matrix<F>>;

template <typename F>
ModuleMap<F> compose(const ModuleMap<F>& g, const ModuleMap<F>& f) {
  ModuleMap<F> out;
  for (std::size_t v = 0; v < f.size(); ++v) out.push_back(g[v] * f[v]);
  return out;
}

template <typename F>
Matrix<F> vectorize(const ModuleMap<F>& f) {
  std::size_t n = 0;
  for (const auto& m : f) n += m.rows() * m.cols();
  Matrix<F> col(n, 1);
  std::size_t i = 0;
  for (const auto& m : f)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) col(i++, 0) = m(r, c);
  return col;
}

template <typename F>
ModuleMap<F> zero_map(const ModuleRep<F>& src, const ModuleRep<F>& dst) {
  ModuleMap<F> f;
  for (int v = 0; v < src.e(); ++v) f.emplace_back(static_cast<std::size_t>(dst.dim(v)), static_cast<std::size_t>(src.dim(v)));
  return f;
}

template <typename F>
ModuleMap<F> linear_combination(const std::vector<ModuleMap<F>>& maps, const std::vector<F>& coeffs,
                                 const ModuleRep<F>& src, const ModuleRep<F>& dst) {
  ModuleMap<F> out = zero_map(src, dst);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (is_zero(coeffs[k])) continue;
    for (std::size_t v = 0; v < out.size(); ++v)
      for (std::size_t r = 0; r < out[v].rows(); ++r)
        for (std::size_t c = 0; c < out[v].cols(); ++c) out[v](r, c) += coeffs[k] * maps[k][v](r, c);
  }
  return out;
}

// Basis of Hom_A(M, N), by solving N_a f_v = f_{v+1} M_a for every arrow a.
template <typename F>
std::vector<ModuleMap<F>> hom_basis(const ModuleRep<F>& m, const ModuleRep<F>& n) {
  const int e = m.e();
  std::vector<std::size_t> offset(static_cast<std::size_t>(e) + 1, 0);
  for (int v = 0; v < e; ++v)
    offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + static_cast<std::size_t>(n.dim(v) * m.dim(v));
  const std::size_t unknowns = offset.back();
  auto var = [&](int v, int r, int c) { return offset[static_cast<std::size_t>(v)] + static_cast<std::size_t>(r * m.dim(v) + c); };
  std::vector<std::vector<std::pair<std::size_t, F>>> rows;
  for (int v = 0; v < e; ++v) {
    const int w = (v + 1) % e;
    const auto& na = n.arrow(v);
    const auto& ma = m.arrow(v);
    for (int r = 0; r < n.dim(w); ++r)
      for (int c = 0; c < m.dim(v); ++c) {
        std::map<std::size_t, F> eq;
        for (int k = 0; k < n.dim(v); ++k) {
          const F& coef = na(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
          if (!is_zero(coef)) eq[var(v, k, c)] += coef;
        }
        for (int k = 0; k < m.dim(w); ++k) {
          const F& coef = ma(static_cast<std::size_t>(k), static_cast<std::size_t>(c));
          if (!is_zero(coef)) eq[var(w, r, k)] -= coef;
        }
        std::vector<std::pair<std::size_t, F>> row;
        for (auto& [idx, val] : eq)
          if (!is_zero(val)) row.emplace_back(idx, val);
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  Matrix<F> system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& [idx, val] : rows[i]) system(i, idx) = val;
  const Matrix<F> sol = nullspace(system);
  std::vector<ModuleMap<F>> basis;
  for (std::size_t k = 0; k < sol.cols(); ++k) {
    ModuleMap<F> f;
    for (int v = 0; v < e; ++v) {
      Matrix<F> mv(static_cast<std::size_t>(n.dim(v)), static_cast<std::size_t>(m.dim(v)));
      for (int r = 0; r < n.dim(v); ++r)
        for (int c = 0; c < m.dim(v); ++c) mv(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = sol(var(v, r, c), k);
      f.push_back(std::move(mv));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

// Multiplicities of the uniserial summands of a module from the ranks of its
// path maps. rho(v, k) is the rank of the path of length k starting at vertex
// v; the number of summands with top at v and length > k is
// rho(v, k) - rho(v-1, k+1).
template <typename RankFn>
std::map<SerialModule, int> decompose_from_ranks(int e, int loewy, RankFn rho) {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(e), std::vector<int>(static_cast<std::size_t>(loewy) + 2, 0));
  for (int v = 0; v < e; ++v)
    for (int k = 0; k <= loewy; ++k) r[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = rho(v, k);
  auto longer_than = [&](int v, int k) {  // summands with top v and length > k
    const int prev = (v - 1 + e) % e;
    return r[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(prev)][static_cast<std::size_t>(k + 1)];
  };
  std::map<SerialModule, int> out;
  for (int v = 0; v < e; ++v)
    for (int l = 1; l <= loewy; ++l) {
      const int a = longer_than(v, l - 1) - (l < loewy ? longer_than(v, l) : 0);
      if (a < 0) throw std::logic_error("decompose_from_ranks: negative multiplicity");
      if (a > 0) out[{v + 1, l}] = a;
    }
  return out;
}

// Decomposition of the submodule U (basis columns per vertex) of V.
template <typename F>
std::map<SerialModule, int> decompose_submodule(const ModuleRep<F>& v, int loewy, const std::vector<Matrix<F>>& u) {
  return decompose_from_ranks(v.e(), loewy, [&](int vert, int k) {
    if (u[static_cast<std::size_t>(vert)].cols() == 0) return 0;
    return static_cast<int>(rank(v.path(vert, k) * u[static_cast<std::size_t>(vert)]));
  });
}

// Decomposition of V / U.
template <typename F>
std::map<SerialModule, int> decompose_quotient(const ModuleRep<F>& v, int loewy, const std::vector<Matrix<F>>& u) {
  return decompose_from_ranks(v.e(), loewy, [&](int vert, int k) {
    const int w = (vert + k) % v.e();
    const auto& uw = u[static_cast<std::size_t>(w)];
    const Matrix<F> p = v.path(vert, k);
    if (p.cols() == 0) return 0;
    return static_cast<int>(rank(p.hconcat(uw)) - rank(uw));
  });
}

// ---------------------------------------------------------------------------
// Stable Hom data for a pair of indecomposables.

template <typename F>
struct StableHomData {
  std::vector<ModuleMap<F>> hom;       // basis of Hom_A(M, N)
  Matrix<F> projective_part;           // columns: vectorised basis of maps factoring through a projective
  std::vector<std::size_t> stable;     // indices into `hom` whose classes form a basis of the stable Hom
  std::size_t stable_dim() const { return stable.size(); }
};

struct ClosureResult {
  ModuleSet members;                   // all indecomposables reached
  std::map<SerialModule, int> layer;   // first n with the module in <S>_n
};

struct Approximation {
  SerialModule source;
  ModuleSet target;  // indecomposable summands of the approximating object, with repetition
};

class NakayamaAlgebra {
 public:
  using F = ModP;

  NakayamaAlgebra(int simples, int loewy) : e_(simples), loewy_(loewy) {
    if (e_ < 1) throw std::invalid_argument("Nakayama algebra needs at least one simple");
    if (loewy_ < 2) throw std::invalid_argument("Nakayama algebra needs Loewy length >= 2");
    for (int t = 1; t <= e_; ++t)
      for (int l = 1; l < loewy_; ++l) nonprojectives_.push_back({t, l});
  }

  int e() const { return e_; }
  int loewy_length() const { return loewy_; }
  bool is_symmetric() const { return (loewy_ - 1) % e_ == 0; }
  std::string name() const { return "nakayama:" + std::to_string(e_) + ":" + std::to_string(loewy_); }

  // Coefficients 0..coefficient_bound-1 are tried for each free entry when
  // searching for maps realising a short exact sequence.
  void set_coefficient_bound(int b) { coefficient_bound_ = b; }

  int wrap(int t) const { return ((t - 1) % e_ + e_) % e_ + 1; }
  SerialModule module(int top, int length) const {
    if (length < 1 || length > loewy_) throw std::invalid_argument("module length out of range");
    return {wrap(top), length};
  }
  bool is_projective(const SerialModule& m) const { return m.length == loewy_; }
  const ModuleSet& nonprojectives() const { return nonprojectives_; }
  ModuleSet simples() const {
    ModuleSet s;
    for (int t = 1; t <= e_; ++t) s.push_back({t, 1});
    return s;
  }

  // Composition factors top to socle, e.g. "2/3/4/1".
  std::string column(const SerialModule& m) const {
    std::string out;
    for (int k = 0; k < m.length; ++k) {
      if (k) out += "/";
      out += std::to_string(wrap(m.top + k));
    }
    return out;
  }

  SerialModule omega(const SerialModule& m) const {
    require_nonprojective(m);
    return {wrap(m.top + m.length), loewy_ - m.length};
  }
  SerialModule omega_inv(const SerialModule& m) const {
    require_nonprojective(m);
    return {wrap(m.top + m.length - loewy_), loewy_ - m.length};
  }
  // soc P(i) = S_{i+L-1} and nu P(i) = I(i), so nu shifts tops by -(L-1).
  SerialModule nu(const SerialModule& m) const { return {wrap(m.top - (loewy_ - 1)), m.length}; }
  SerialModule nu_inv(const SerialModule& m) const { return {wrap(m.top + (loewy_ - 1)), m.length}; }
  // Auslander-Reiten translate, from the almost split sequence
  //   0 -> M(t+1, l) -> M(t, l+1) (+) M(t+1, l-1) -> M(t, l) -> 0.
  SerialModule ar_translate(const SerialModule& m) const {
    require_nonprojective(m);
    return {wrap(m.top + 1), m.length};
  }

  ModuleRep<F> rep(const std::vector<SerialModule>& summands) const { return ModuleRep<F>(e_, summands); }

  // Projective cover P(t) -> M(t, l): basis vector k maps to basis vector k.
  ModuleMap<F> projective_cover_map(const SerialModule& m) const {
    const auto p = rep({{m.top, loewy_}});
    const auto n = rep({m});
    auto f = zero_map(p, n);
    for (int k = 0; k < m.length; ++k) {
      const int v = p.vertex_of(0, k);
      f[static_cast<std::size_t>(v)](static_cast<std::size_t>(n.local(0, k)), static_cast<std::size_t>(p.local(0, k))) = F(1);
    }
    return f;
  }

  // Injective hull M(t, l) -> P(t+l-L), onto the bottom l basis vectors.
  SerialModule injective_hull(const SerialModule& m) const { return {wrap(m.top + m.length - loewy_), loewy_}; }
  ModuleMap<F> injective_hull_map(const SerialModule& m) const {
    const auto src = rep({m});
    const auto inj = rep({injective_hull(m)});
    auto f = zero_map(src, inj);
    for (int k = 0; k < m.length; ++k) {
      const int v = src.vertex_of(0, k);
      f[static_cast<std::size_t>(v)](static_cast<std::size_t>(inj.local(0, loewy_ - m.length + k)), static_cast<std::size_t>(src.local(0, k))) = F(1);
    }
    return f;
  }

  const StableHomData<F>& stable_data(const SerialModule& m, const SerialModule& n) const {
    std::lock_guard lock(*mutex_);
    auto key = std::make_pair(m, n);
    auto it = stable_cache_.find(key);
    if (it != stable_cache_.end()) return it->second;
    return stable_cache_.emplace(key, compute_stable(m, n)).first->second;
  }

  int hom_dim(const SerialModule& m, const SerialModule& n) const {
    return static_cast<int>(stable_data(m, n).hom.size());
  }

  int stable_hom_dim(const SerialModule& m, const SerialModule& n) const {
    require_nonprojective(m);
    require_nonprojective(n);
    return static_cast<int>(stable_data(m, n).stable_dim());
  }

  // Coordinates of a map M -> N in the stable basis; empty optional never
  // happens for genuine module maps.
  std::vector<F> stable_coordinates(const SerialModule& m, const SerialModule& n, const ModuleMap<F>& f) const {
    const auto& d = stable_data(m, n);
    Matrix<F> basis = d.projective_part;
    for (auto s : d.stable) basis = basis.hconcat(vectorize(d.hom[s]));
    const Matrix<F> aug = basis.hconcat(vectorize(f));
    Matrix<F> r = aug;
    const auto piv = rref(r);
    if (!piv.empty() && piv.back() == basis.cols()) throw std::logic_error("stable_coordinates: not a module map");
    std::vector<F> x(basis.cols(), F(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, basis.cols());
    return {x.begin() + static_cast<std::ptrdiff_t>(d.projective_part.cols()), x.end()};
  }

  bool is_stably_zero(const SerialModule& m, const SerialModule& n, const ModuleMap<F>& f) const {
    for (const auto& c : stable_coordinates(m, n, f))
      if (!is_zero(c)) return false;
    return true;
  }

  // ---- sms predicates -----------------------------------------------------

  bool is_orthogonal(const ModuleSet& s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (is_projective(s[i])) return false;
      if (stable_hom_dim(s[i], s[i]) != 1) return false;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (i != j && (s[i] == s[j] || stable_hom_dim(s[i], s[j]) != 0)) return false;
    }
    return true;
  }

  bool is_wsms(const ModuleSet& s) const {
    if (!is_orthogonal(s)) return false;
    for (const auto& x : nonprojectives_) {
      bool hit = false;
      for (const auto& t : s)
        if (stable_hom_dim(x, t) != 0) hit = true;
      if (!hit) return false;
    }
    return true;
  }

  // <S>_1 = S and <S>_n = <S>_{n-1} * <S>: indecomposables Y admitting a short
  // exact sequence 0 -> X -> Y (+) P -> Z -> 0 with X in add <S>_{n-1},
  // Z in add S and P projective. Iterated to a fixed point.
  ClosureResult layered_closure(const ModuleSet& generators) const {
    ClosureResult res;
    std::set<SerialModule> members(generators.begin(), generators.end());
    for (const auto& g : generators) {
      require_nonprojective(g);
      res.layer[g] = 1;
    }
    for (int n = 2; !members.empty(); ++n) {
      std::vector<SerialModule> fresh;
      for (const auto& y : nonprojectives_)
        if (!members.count(y) && in_extension_layer(y, members, generators)) fresh.push_back(y);
      if (fresh.empty()) break;
      for (const auto& y : fresh) {
        members.insert(y);
        res.layer[y] = n;
      }
    }
    res.members.assign(members.begin(), members.end());
    return res;
  }

  bool is_sms(const ModuleSet& s) const {
    if (!is_orthogonal(s)) return false;
    return layered_closure(s).members.size() == nonprojectives_.size();
  }

  // Indecomposables of the smallest extension-closed subcategory of the
  // stable category containing X.
  ModuleSet ext_closure(const ModuleSet& x) const { return layered_closure(x).members; }

  // ---- approximations and mutation ----------------------------------------

  // A minimal left add(F)-approximation of M. The multiplicity of C in the
  // target is dim stHom(M, C) minus the dimension of the maps M -> C that
  // factor through a radical map C' -> C with C' in F.
  struct LeftApprox {
    std::vector<SerialModule> target;
    std::vector<ModuleMap<F>> components;  // M -> target[i]
  };

  LeftApprox minimal_left_approximation(const SerialModule& m, const ModuleSet& f) const {
    require_nonprojective(m);
    LeftApprox out;
    for (const auto& c : f) {
      const auto& d = stable_data(m, c);
      if (d.stable.empty()) continue;
      Matrix<F> factored = d.projective_part;
      for (const auto& c2 : f) {
        const auto radical = radical_maps(c2, c);
        if (radical.empty()) continue;
        const auto& d2 = stable_data(m, c2);
        for (const auto& u : d2.hom)
          for (const auto& h : radical) factored = factored.hconcat(vectorize(compose(h, u)));
      }
      Matrix<F> reps(vectorize(d.hom[d.stable[0]]).rows(), 0);
      for (auto s : d.stable) reps = reps.hconcat(vectorize(d.hom[s]));
      for (auto k : complement_columns(factored, reps)) {
        out.target.push_back(c);
        out.components.push_back(d.hom[d.stable[k]]);
      }
    }
    return out;
  }

  struct RightApprox {
    std::vector<SerialModule> source;
    std::vector<ModuleMap<F>> components;  // source[i] -> N
  };

  RightApprox minimal_right_approximation(const SerialModule& n, const ModuleSet& f) const {
    require_nonprojective(n);
    RightApprox out;
    for (const auto& c : f) {
      const auto& d = stable_data(c, n);
      if (d.stable.empty()) continue;
      Matrix<F> factored = d.projective_part;
      for (const auto& c2 : f) {
        const auto radical = radical_maps(c, c2);
        if (radical.empty()) continue;
        const auto& d2 = stable_data(c2, n);
        for (const auto& u : d2.hom)
          for (const auto& h : radical) factored = factored.hconcat(vectorize(compose(u, h)));
      }
      Matrix<F> reps(vectorize(d.hom[d.stable[0]]).rows(), 0);
      for (auto s : d.stable) reps = reps.hconcat(vectorize(d.hom[s]));
      for (auto k : complement_columns(factored, reps)) {
        out.source.push_back(c);
        out.components.push_back(d.hom[d.stable[k]]);
      }
    }
    return out;
  }

  // Every stable map M -> C (C in f) factors through the approximation.
  bool is_left_approximation(const SerialModule& m, const LeftApprox& a, const ModuleSet& f) const {
    for (const auto& c : f) {
      const auto& d = stable_data(m, c);
      if (d.stable.empty()) continue;
      Matrix<F> span = d.projective_part;
      for (std::size_t i = 0; i < a.target.size(); ++i)
        for (const auto& h : stable_data(a.target[i], c).hom) span = span.hconcat(vectorize(compose(h, a.components[i])));
      const std::size_t base = rank(span);
      for (auto s : d.stable)
        if (rank(span.hconcat(vectorize(d.hom[s]))) != base) return false;
    }
    return true;
  }

  // Minimal: dropping any single summand breaks the approximation property.
  bool is_minimal_left_approximation(const SerialModule& m, const LeftApprox& a, const ModuleSet& f) const {
    if (!is_left_approximation(m, a, f)) return false;
    for (std::size_t drop = 0; drop < a.target.size(); ++drop) {
      LeftApprox smaller;
      for (std::size_t i = 0; i < a.target.size(); ++i)
        if (i != drop) {
          smaller.target.push_back(a.target[i]);
          smaller.components.push_back(a.components[i]);
        }
      if (is_left_approximation(m, smaller, f)) return false;
    }
    return true;
  }

  // Cone of the approximation M -> X' in the stable category: the cokernel of
  // M -> X' (+) I(M), stripped of projective summands.
  SerialModule cone(const SerialModule& m, const LeftApprox& a) const {
    std::vector<SerialModule> parts = a.target;
    parts.push_back(injective_hull(m));
    const auto v = rep(parts);
    const auto src = rep({m});
    const auto inj = injective_hull_map(m);
    std::vector<Matrix<F>> image;
    for (int vert = 0; vert < e_; ++vert) {
      Matrix<F> col(static_cast<std::size_t>(v.dim(vert)), static_cast<std::size_t>(src.dim(vert)));
      for (std::size_t s = 0; s < parts.size(); ++s) {
        const auto& comp = s + 1 < parts.size() ? a.components[s][static_cast<std::size_t>(vert)] : inj[static_cast<std::size_t>(vert)];
        place_block(v, s, vert, comp, col, /*rows=*/true);
      }
      image.push_back(column_basis(col));
    }
    return single_nonprojective(decompose_quotient(v, loewy_, image), "cone");
  }

  // Cocone of X' -> N: the kernel of X' (+) P(N) -> N, without projectives.
  SerialModule cocone(const SerialModule& n, const RightApprox& a) const {
    std::vector<SerialModule> parts = a.source;
    parts.push_back({n.top, loewy_});
    const auto v = rep(parts);
    const auto tgt = rep({n});
    const auto cover = projective_cover_map(n);
    std::vector<Matrix<F>> kernel;
    for (int vert = 0; vert < e_; ++vert) {
      Matrix<F> row(static_cast<std::size_t>(tgt.dim(vert)), static_cast<std::size_t>(v.dim(vert)));
      for (std::size_t s = 0; s < parts.size(); ++s) {
        const auto& comp = s + 1 < parts.size() ? a.components[s][static_cast<std::size_t>(vert)] : cover[static_cast<std::size_t>(vert)];
        place_block(v, s, vert, comp, row, /*rows=*/false);
      }
      kernel.push_back(nullspace(row));
    }
    return single_nonprojective(decompose_submodule(v, loewy_, kernel), "cocone");
  }

  bool is_nu_stable(const ModuleSet& x) const {
    std::set<SerialModule> s(x.begin(), x.end());
    for (const auto& m : x)
      if (!s.count(nu(m))) return false;
    return true;
  }

  ModuleSet mutate_left(const ModuleSet& s, const ModuleSet& x) const {
    check_mutation_input(s, x);
    return mutate_left_unchecked(s, x);
  }

  ModuleSet mutate_right(const ModuleSet& s, const ModuleSet& x) const {
    check_mutation_input(s, x);
    return mutate_right_unchecked(s, x);
  }

  ModuleSet mutate_left_unchecked(const ModuleSet& s, const ModuleSet& x) const {
    const std::set<SerialModule> xs(x.begin(), x.end());
    const ModuleSet fx = ext_closure(x);
    ModuleSet out;
    for (const auto& m : s) {
      if (xs.count(m)) {
        out.push_back(omega_inv(m));
        continue;
      }
      const auto om = omega(m);
      const auto a = minimal_left_approximation(om, fx);
      out.push_back(a.target.empty() ? m : cone(om, a));
    }
    return sorted(out);
  }

  ModuleSet mutate_right_unchecked(const ModuleSet& s, const ModuleSet& x) const {
    const std::set<SerialModule> xs(x.begin(), x.end());
    const ModuleSet fx = ext_closure(x);
    ModuleSet out;
    for (const auto& m : s) {
      if (xs.count(m)) {
        out.push_back(omega(m));
        continue;
      }
      const auto om = omega_inv(m);
      const auto a = minimal_right_approximation(om, fx);
      out.push_back(a.source.empty() ? m : cocone(om, a));
    }
    return sorted(out);
  }

  // All sms's: e-element orthogonal sets that pass is_sms.
  std::vector<ModuleSet> all_sms(int bound = 24) const {
    if (static_cast<int>(nonprojectives_.size()) > bound)
      throw std::runtime_error("all_sms: " + name() + " has " + std::to_string(nonprojectives_.size()) +
                               " non-projectives, above the bound " + std::to_string(bound));
    std::vector<ModuleSet> out;
    for (const auto& cand : orthogonal_candidates())
      if (is_sms(cand)) out.push_back(cand);
    return out;
  }

  // Every e-element set of non-projectives with stable End = k and pairwise
  // vanishing stable Homs.
  std::vector<ModuleSet> orthogonal_candidates() const {
    std::vector<SerialModule> bricks;
    for (const auto& m : nonprojectives_)
      if (stable_hom_dim(m, m) == 1) bricks.push_back(m);
    std::vector<ModuleSet> out;
    ModuleSet cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (static_cast<int>(cur.size()) == e_) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < bricks.size(); ++i) {
        bool ok = true;
        for (const auto& c : cur)
          if (stable_hom_dim(c, bricks[i]) != 0 || stable_hom_dim(bricks[i], c) != 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(bricks[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }

  // The stable AR-quiver is ZA_{L-1} / <tau^e>, type (A_{L-1}, e/(L-1), 1).
  RfsType stable_type() const {
    if (loewy_ < 2) throw std::logic_error("no stable category");
    return RfsType{DynkinGraph(Family::A, loewy_ - 1), Frequency(e_, loewy_ - 1), 1, true};
  }

  // Position of M(t, l) in the mesh coordinates of stable_type(): S_1 sits at
  // (0, 1) and tau M(t, l) = M(t+1, l) moves one level down.
  ZVertex ar_coordinate(const SerialModule& m) const { return {((1 - m.top) % e_ + e_) % e_, m.length}; }

 private:
  void require_nonprojective(const SerialModule& m) const {
    if (m.top < 1 || m.top > e_ || m.length < 1 || m.length > loewy_)
      throw std::invalid_argument("module " + label(m) + " does not exist over " + name());
    if (is_projective(m)) throw std::invalid_argument("module " + label(m) + " is projective");
  }

  void check_mutation_input(const ModuleSet& s, const ModuleSet& x) const {
    std::set<SerialModule> ss(s.begin(), s.end());
    for (const auto& m : x)
      if (!ss.count(m)) throw std::invalid_argument("mutation set is not contained in the sms");
    if (!is_nu_stable(x)) throw std::invalid_argument("mutation set is not Nakayama-stable");
    if (!is_sms(s)) throw std::invalid_argument("input is not a simple-minded system");
  }

  // Writes the block of a map between summand s of `v` and a one-summand
  // module into `out` (as rows of the target if `rows`, else as columns).
  static void place_block(const ModuleRep<F>& v, std::size_t s, int vert, const Matrix<F>& comp, Matrix<F>& out,
                          bool rows) {
    for (int k = 0; k < v.summands()[s].length; ++k) {
      if (v.vertex_of(s, k) != vert) continue;
      const auto li = static_cast<std::size_t>(v.local(s, k));
      // comp's coordinate for basis vector k of the summand at this vertex
      const auto sub = ModuleRep<F>(v.e(), {v.summands()[s]});
      const auto lk = static_cast<std::size_t>(sub.local(0, k));
      if (rows) {
        for (std::size_t c = 0; c < comp.cols(); ++c) out(li, c) = comp(lk, c);
      } else {
        for (std::size_t r = 0; r < comp.rows(); ++r) out(r, li) = comp(r, lk);
      }
    }
  }

  SerialModule single_nonprojective(const std::map<SerialModule, int>& parts, const char* what) const {
    std::optional<SerialModule> found;
    for (const auto& [m, mult] : parts) {
      if (is_projective(m)) continue;
      if (mult != 1 || found) throw std::logic_error(std::string(what) + " is not indecomposable modulo projectives");
      found = m;
    }
    if (!found) throw std::logic_error(std::string(what) + " is projective");
    return *found;
  }

  // Radical maps C -> D between indecomposables: all maps if C != D, the
  // non-invertible endomorphisms if C == D.
  std::vector<ModuleMap<F>> radical_maps(const SerialModule& c, const SerialModule& d) const {
    const auto& data = stable_data(c, d);
    if (c != d) return data.hom;
    // An endomorphism of a uniserial module is invertible iff it is nonzero on
    // the top basis vector; keep the kernel of that functional.
    const auto r = rep({c});
    const int v = r.vertex_of(0, 0);
    const auto top = static_cast<std::size_t>(r.local(0, 0));
    Matrix<F> functional(1, data.hom.size());
    for (std::size_t i = 0; i < data.hom.size(); ++i) functional(0, i) = data.hom[i][static_cast<std::size_t>(v)](top, top);
    const Matrix<F> ker = nullspace(functional);
    std::vector<ModuleMap<F>> out;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
      std::vector<F> coeffs(data.hom.size());
      for (std::size_t i = 0; i < data.hom.size(); ++i) coeffs[i] = ker(i, k);
      out.push_back(linear_combination(data.hom, coeffs, r, r));
    }
    return out;
  }

  StableHomData<F> compute_stable(const SerialModule& m, const SerialModule& n) const {
    StableHomData<F> d;
    const auto rm = rep({m});
    const auto rn = rep({n});
    d.hom = hom_basis(rm, rn);
    std::size_t len = 0;
    for (int v = 0; v < e_; ++v) len += static_cast<std::size_t>(rm.dim(v) * rn.dim(v));
    d.projective_part = Matrix<F>(len, 0);
    if (!is_projective(n)) {
      const auto rp = rep({{n.top, loewy_}});
      const auto pi = projective_cover_map(n);
      Matrix<F> through(len, 0);
      for (const auto& h : hom_basis(rm, rp)) through = through.hconcat(vectorize(compose(pi, h)));
      d.projective_part = column_basis(through);
    } else {
      Matrix<F> all(len, 0);
      for (const auto& h : d.hom) all = all.hconcat(vectorize(h));
      d.projective_part = column_basis(all);
    }
    Matrix<F> hom_cols(len, 0);
    for (const auto& h : d.hom) hom_cols = hom_cols.hconcat(vectorize(h));
    d.stable = complement_columns(d.projective_part, hom_cols);
    return d;
  }

  // Whether Y lies in add(members) * add(generators) modulo projectives.
  // Searches stable maps g : Y -> Z with Z in add(generators); the cocone of g
  // is the kernel of (g, pi) : Y (+) P(Z) -> Z.
  bool in_extension_layer(const SerialModule& y, const std::set<SerialModule>& members,
                          const ModuleSet& generators) const {
    struct Target {
      SerialModule gen;
      std::vector<ModuleMap<F>> reps;  // stable basis representatives Y -> gen
    };
    std::vector<Target> targets;
    for (const auto& g : generators) {
      const auto& d = stable_data(y, g);
      if (d.stable.empty()) continue;
      Target t{g, {}};
      for (auto s : d.stable) t.reps.push_back(d.hom[s]);
      targets.push_back(std::move(t));
    }
    if (targets.empty()) return false;

    // For each target, the candidate coefficient matrices (full row rank,
    // reduced echelon form) of every size 0..dim.
    std::vector<std::vector<std::vector<std::vector<F>>>> choices;
    for (const auto& t : targets) choices.push_back(echelon_choices(static_cast<int>(t.reps.size())));

    std::vector<std::size_t> pick(targets.size(), 0);
    while (true) {
      bool nonzero = false;
      for (std::size_t i = 0; i < targets.size(); ++i)
        if (!choices[i][pick[i]].empty()) nonzero = true;
      if (nonzero && cocone_in(y, targets, choices, pick, members)) return true;
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    return false;
  }

  template <typename Targets>
  bool cocone_in(const SerialModule& y, const Targets& targets,
                 const std::vector<std::vector<std::vector<std::vector<F>>>>& choices,
                 const std::vector<std::size_t>& pick, const std::set<SerialModule>& members) const {
    std::vector<SerialModule> zparts;
    std::vector<ModuleMap<F>> gparts;
    const auto ry = rep({y});
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto rg = rep({targets[i].gen});
      for (const auto& row : choices[i][pick[i]]) {
        zparts.push_back(targets[i].gen);
        gparts.push_back(linear_combination(targets[i].reps, row, ry, rg));
      }
    }
    // V = Y (+) P(Z); the map V -> Z is g on Y and the projective covers on P(Z).
    std::vector<SerialModule> vparts{y};
    for (const auto& z : zparts) vparts.push_back({z.top, loewy_});
    const auto v = rep(vparts);
    const auto z = rep(zparts);
    std::vector<Matrix<F>> kernel;
    for (int vert = 0; vert < e_; ++vert) {
      Matrix<F> phi(static_cast<std::size_t>(z.dim(vert)), static_cast<std::size_t>(v.dim(vert)));
      for (std::size_t j = 0; j < zparts.size(); ++j) {
        const auto cover = projective_cover_map(zparts[j]);
        write_component(z, j, v, 0, vert, gparts[j][static_cast<std::size_t>(vert)], phi);
        write_component(z, j, v, j + 1, vert, cover[static_cast<std::size_t>(vert)], phi);
      }
      kernel.push_back(nullspace(phi));
    }
    for (const auto& [m, mult] : decompose_submodule(v, loewy_, kernel))
      if (!is_projective(m) && !members.count(m)) return false;
    return true;
  }

  // Copies a map from summand `vs` of V to summand `zs` of Z (both given on a
  // single-summand basis) into the big matrix at vertex `vert`.
  static void write_component(const ModuleRep<F>& z, std::size_t zs, const ModuleRep<F>& v, std::size_t vs, int vert,
                              const Matrix<F>& block, Matrix<F>& phi) {
    const ModuleRep<F> zsub(z.e(), {z.summands()[zs]});
    const ModuleRep<F> vsub(v.e(), {v.summands()[vs]});
    for (int a = 0; a < z.summands()[zs].length; ++a) {
      if (z.vertex_of(zs, a) != vert) continue;
      for (int b = 0; b < v.summands()[vs].length; ++b) {
        if (v.vertex_of(vs, b) != vert) continue;
        phi(static_cast<std::size_t>(z.local(zs, a)), static_cast<std::size_t>(v.local(vs, b))) =
            block(static_cast<std::size_t>(zsub.local(0, a)), static_cast<std::size_t>(vsub.local(0, b)));
      }
    }
  }

  // Row-reduced coefficient matrices with entries in 0..coefficient_bound-1
  // for the free positions, grouped by rank (rank 0 first).
  std::vector<std::vector<std::vector<F>>> echelon_choices(int dim) const {
    std::vector<std::vector<std::vector<F>>> out;
    out.push_back({});
    for (int rk = 1; rk <= dim; ++rk) {
      // pivot column sets
      std::vector<int> piv(static_cast<std::size_t>(rk));
      auto next_comb = [&](bool first) {
        if (first) {
          for (int i = 0; i < rk; ++i) piv[static_cast<std::size_t>(i)] = i;
          return true;
        }
        int i = rk - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] == dim - rk + i) --i;
        if (i < 0) return false;
        ++piv[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < rk; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
        return true;
      };
      for (bool ok = next_comb(true); ok; ok = next_comb(false)) {
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < rk; ++r)
          for (int c = piv[static_cast<std::size_t>(r)] + 1; c < dim; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_pos.emplace_back(r, c);
        std::vector<int> val(free_pos.size(), 0);
        while (true) {
          std::vector<std::vector<F>> mat(static_cast<std::size_t>(rk), std::vector<F>(static_cast<std::size_t>(dim), F(0)));
          for (int r = 0; r < rk; ++r) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] = F(1);
          for (std::size_t k = 0; k < free_pos.size(); ++k)
            mat[static_cast<std::size_t>(free_pos[k].first)][static_cast<std::size_t>(free_pos[k].second)] = F(val[k]);
          out.push_back(std::move(mat));
          std::size_t k = 0;
          while (k < val.size() && ++val[k] == coefficient_bound_) val[k++] = 0;
          if (k == val.size()) break;
        }
      }
    }
    return out;
  }

  int e_;
  int loewy_;
  int coefficient_bound_ = 3;
  ModuleSet nonprojectives_;
  mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  mutable std::map<std::pair<SerialModule, SerialModule>, StableHomData<F>> stable_cache_;
};

// "nakayama:E:L"
inline NakayamaAlgebra parse_nakayama(const std::string& text) {
  static const std::regex re(R"(^nakayama:(\d+):(\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("bad algebra '" + text + "', expected nakayama:E:L");
  return NakayamaAlgebra(std::stoi(m[1]), std::stoi(m[2]));
}

// "simples", or comma-separated top:length pairs such as "1:3,2:4".
inline ModuleSet parse_module_set(const NakayamaAlgebra& a, const std::string& text) {
  if (text == "simples") return a.simples();
  static const std::regex item(R"(^(\d+):(\d+)$)");
  ModuleSet out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::smatch m;
    if (!std::regex_match(tok, m, item)) throw std::invalid_argument("bad module '" + tok + "', expected top:length");
    const int top = std::stoi(m[1]);
    const int len = std::stoi(m[2]);
    if (top < 1 || top > a.e() || len < 1 || len >= a.loewy_length())
      throw std::invalid_argument("module " + tok + " is not a non-projective indecomposable of " + a.name());
    out.push_back({top, len});
  }
  out = sorted(out);
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw std::invalid_argument("repeated module in '" + text + "'");
  return out;
}

// Stable Hom dimension between uniserials computed over an arbitrary field;
// used to recheck the prime-field computation over the rationals.
template <typename F>
int stable_hom_dim_over(int e, int loewy, const SerialModule& m, const SerialModule& n) {
  const ModuleRep<F> rm(e, {m});
  const ModuleRep<F> rn(e, {n});
  const ModuleRep<F> rp(e, {{n.top, loewy}});
  const auto hom = hom_basis(rm, rn);
  ModuleMap<F> pi = zero_map(rp, rn);
  for (int k = 0; k < n.length; ++k) {
    const int v = rp.vertex_of(0, k);
    pi[static_cast<std::size_t>(v)](static_cast<std::size_t>(rn.local(0, k)), static_cast<std::size_t>(rp.local(0, k))) = F(1);
  }
  std::size_t len = 0;
  for (int v = 0; v < e; ++v) len += static_cast<std::size_t>(rm.dim(v) * rn.dim(v));
  Matrix<F> through(len, 0);
  for (const auto& h : hom_basis(rm, rp)) through = through.hconcat(vectorize(compose(pi, h)));
  return static_cast<int>(hom.size()) - static_cast<int>(rank(through));
}

}  // namespace smsw
