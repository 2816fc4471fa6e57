#pragma once

// The translation quiver ZQ of a Dynkin tree, its finite windows, and its
// admissible quotients ZQ / <zeta tau^{-r}>.
//
// Conventions. ZQ has vertices (p, q) for p in Z and q a node of Q. Each slice
// {p} x Q is a copy of the oriented tree; every tree arrow a -> b also gives
// the cross arrow (p, b) -> (p+1, a). The translation is tau(p, q) = (p-1, q),
// so the mesh ending in (p+1, a) starts in (p, a).

#include "smsw/dynkin.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smsw {

struct ZVertex {
  int p = 0;
  int q = 1;
  friend auto operator<=>(const ZVertex&, const ZVertex&) = default;
};

inline ZVertex tau(ZVertex v) { return {v.p - 1, v.q}; }
inline ZVertex tau_inv(ZVertex v) { return {v.p + 1, v.q}; }

inline std::vector<ZVertex> successors(const DynkinGraph& g, ZVertex v) {
  std::vector<ZVertex> out;
  for (const auto& a : g.arrows()) {
    if (a.from == v.q) out.push_back({v.p, a.to});
    if (a.to == v.q) out.push_back({v.p + 1, a.from});
  }
  return out;
}

inline std::vector<ZVertex> predecessors(const DynkinGraph& g, ZVertex v) {
  std::vector<ZVertex> out;
  for (const auto& a : g.arrows()) {
    if (a.to == v.q) out.push_back({v.p, a.from});
    if (a.from == v.q) out.push_back({v.p - 1, a.to});
  }
  return out;
}

// Topological order of the tree nodes (sources of slice arrows first).
inline std::vector<int> slice_order(const DynkinGraph& g) {
  std::vector<int> indeg(static_cast<std::size_t>(g.rank() + 1), 0);
  for (const auto& a : g.arrows()) ++indeg[static_cast<std::size_t>(a.to)];
  std::vector<int> order;
  std::queue<int> ready;
  for (int q = 1; q <= g.rank(); ++q)
    if (indeg[static_cast<std::size_t>(q)] == 0) ready.push(q);
  while (!ready.empty()) {
    int q = ready.front();
    ready.pop();
    order.push_back(q);
    for (const auto& a : g.arrows())
      if (a.from == q && --indeg[static_cast<std::size_t>(a.to)] == 0) ready.push(a.to);
  }
  return order;
}

struct QuiverWindow {
  DynkinGraph graph;
  int p_min;
  int p_max;
  std::vector<ZVertex> vertices;
  std::vector<std::pair<ZVertex, ZVertex>> arrows;

  bool contains(ZVertex v) const { return v.p >= p_min && v.p <= p_max && v.q >= 1 && v.q <= graph.rank(); }
};

inline QuiverWindow build_window(const DynkinGraph& g, int p_min, int p_max) {
  if (p_min > p_max) throw std::invalid_argument("build_window: p_min > p_max");
  QuiverWindow w{g, p_min, p_max, {}, {}};
  for (int p = p_min; p <= p_max; ++p)
    for (int q = 1; q <= g.rank(); ++q) w.vertices.push_back({p, q});
  for (const auto& v : w.vertices)
    for (const auto& s : successors(g, v))
      if (w.contains(s)) w.arrows.emplace_back(v, s);
  return w;
}

// A graph automorphism lifted to ZQ: (p, q) -> (p + shift[q], sigma(q)).
struct ZAutomorphism {
  GraphAutomorphism sigma;
  std::vector<int> shift;  // indexed by q-1

  ZVertex operator()(ZVertex v) const {
    return {v.p + shift[static_cast<std::size_t>(v.q - 1)], sigma(v.q)};
  }
};

// Lift sigma to an automorphism of ZQ of the same order. With a non-symmetric
// orientation the lift needs a level shift per node.
inline ZAutomorphism lift_graph_automorphism(const DynkinGraph& g, const GraphAutomorphism& sigma) {
  const auto n = static_cast<std::size_t>(g.rank());
  std::vector<int> shift(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::queue<int> todo;
  todo.push(1);
  while (!todo.empty()) {
    const int a = todo.front();
    todo.pop();
    for (const auto& arr : g.arrows()) {
      int other = 0;
      if (arr.from == a) other = arr.to;
      else if (arr.to == a) other = arr.from;
      else continue;
      if (seen[static_cast<std::size_t>(other - 1)]) continue;
      // Image of the slice arrow from -> to is either a slice arrow (same
      // shift) or a reversed tree arrow, realised as a cross arrow (+1).
      const int da = shift[static_cast<std::size_t>(a - 1)];
      const bool kept = g.has_arrow(sigma(arr.from), sigma(arr.to));
      int d_from, d_to;
      if (arr.from == a) {
        d_from = da;
        d_to = kept ? da : da + 1;
        shift[static_cast<std::size_t>(other - 1)] = d_to;
      } else {
        d_to = da;
        d_from = kept ? da : da - 1;
        shift[static_cast<std::size_t>(other - 1)] = d_from;
      }
      seen[static_cast<std::size_t>(other - 1)] = true;
      todo.push(other);
    }
  }
  // sigma^order moves every vertex by the same number of levels; normalise it
  // to zero.
  int total = 0;
  for (int q = 1, k = 0; k < sigma.order; ++k) {
    total += shift[static_cast<std::size_t>(q - 1)];
    q = sigma(q);
  }
  if (total % sigma.order != 0)
    throw std::invalid_argument("graph automorphism does not lift to ZQ with the same order");
  for (auto& s : shift) s -= total / sigma.order;
  return {sigma, shift};
}

// ZQ / <zeta tau^{-r}>. Vertices are canonical lifts: among the lifts with
// level in [0, t*r), the lexicographically smallest (p, q).
class StableTranslationQuiver {
 public:
  explicit StableTranslationQuiver(const RfsType& type) : type_(type), graph_(type.graph) {
    const auto grp = admissible_group(type);
    r_ = grp.r;
    zeta_ = lift_graph_automorphism(graph_, grp.zeta);
    period_ = grp.zeta.order * r_;
    for (int q = 1; q <= graph_.rank(); ++q) {
      const int step = r_ + zeta_.shift[static_cast<std::size_t>(q - 1)];
      if (step <= 0) throw std::logic_error("deck transformation does not raise levels");
    }
    for (int p = 0; p < period_; ++p)
      for (int q = 1; q <= graph_.rank(); ++q) {
        const ZVertex c = canonical({p, q});
        if (c == ZVertex{p, q}) vertices_.push_back(c);
      }
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = static_cast<int>(i);
    tau_.resize(vertices_.size());
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      tau_[i] = index_of(smsw::tau(vertices_[i]));
      for (const auto& s : successors(graph_, vertices_[i])) {
        const int j = index_of(s);
        arrows_.emplace_back(static_cast<int>(i), j);
        out_[i].push_back(j);
        in_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
      }
    }
    std::sort(arrows_.begin(), arrows_.end());
  }

  const RfsType& type() const { return type_; }
  const DynkinGraph& graph() const { return graph_; }
  int r() const { return r_; }
  int period() const { return period_; }
  const ZAutomorphism& zeta() const { return zeta_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<ZVertex>& vertices() const { return vertices_; }
  const ZVertex& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  const std::vector<int>& out(int i) const { return out_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& in(int i) const { return in_.at(static_cast<std::size_t>(i)); }
  int tau(int i) const { return tau_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& tau_permutation() const { return tau_; }

  // The deck transformation zeta tau^{-r} and its inverse.
  ZVertex deck(ZVertex v) const {
    ZVertex z = zeta_(v);
    return {z.p + r_, z.q};
  }
  ZVertex deck_inv(ZVertex v) const {
    const int q0 = preimage_node(v.q);
    return {v.p - r_ - zeta_.shift[static_cast<std::size_t>(q0 - 1)], q0};
  }

  ZVertex canonical(ZVertex v) const {
    ZVertex best{};
    bool have = false;
    ZVertex cur = v;
    for (int k = 0; k < zeta_.sigma.order; ++k) {
      ZVertex c{((cur.p % period_) + period_) % period_, cur.q};
      if (!have || c < best) {
        best = c;
        have = true;
      }
      cur = deck(cur);
    }
    return best;
  }

  int index_of(ZVertex v) const {
    auto it = index_.find(canonical(v));
    if (it == index_.end()) throw std::logic_error("vertex outside quotient");
    return it->second;
  }

  // `copies` consecutive preimages of vertex i, ascending by level, starting
  // from the canonical lift.
  std::vector<ZVertex> lift(int i, int copies) const {
    if (copies < 1) throw std::invalid_argument("lift: copies must be >= 1");
    std::vector<ZVertex> out;
    ZVertex cur = vertex(i);
    for (int k = 0; k < copies; ++k) {
      out.push_back(cur);
      cur = deck(cur);
    }
    return out;
  }

  // Every preimage of vertex i with level in [p_min, p_max].
  std::vector<ZVertex> lifts_in_range(int i, int p_min, int p_max) const {
    std::vector<ZVertex> out;
    ZVertex cur = vertex(i);
    while (cur.p >= p_min) cur = deck_inv(cur);
    while (cur.p <= p_max) {
      if (cur.p >= p_min) out.push_back(cur);
      cur = deck(cur);
    }
    return out;
  }

  std::string label(int i) const {
    const auto& v = vertex(i);
    return "(" + std::to_string(v.p) + "," + std::to_string(v.q) + ")";
  }

 private:
  int preimage_node(int q) const {
    for (int x = 1; x <= graph_.rank(); ++x)
      if (zeta_.sigma(x) == q) return x;
    throw std::logic_error("sigma is not a permutation");
  }

  RfsType type_;
  DynkinGraph graph_;
  int r_ = 0;
  int period_ = 0;
  ZAutomorphism zeta_;
  std::vector<ZVertex> vertices_;
  std::map<ZVertex, int> index_;
  std::vector<int> tau_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

inline StableTranslationQuiver quotient(const RfsType& t) { return StableTranslationQuiver(t); }

// A vertex permutation of a quotient preserving arrows (with multiplicity)
// and commuting with tau. image[i] is the image of vertex i.
struct QuiverAutomorphism {
  std::vector<int> image;
  friend auto operator<=>(const QuiverAutomorphism&, const QuiverAutomorphism&) = default;

  QuiverAutomorphism compose(const QuiverAutomorphism& inner) const {
    QuiverAutomorphism out;
    out.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i)
      out.image[i] = image[static_cast<std::size_t>(inner.image[i])];
    return out;
  }

  QuiverAutomorphism inverse() const {
    QuiverAutomorphism out;
    out.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) out.image[static_cast<std::size_t>(image[i])] = static_cast<int>(i);
    return out;
  }
};

inline bool is_automorphism(const StableTranslationQuiver& g, const QuiverAutomorphism& a) {
  const auto n = g.size();
  if (a.image.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : a.image) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  std::vector<std::pair<int, int>> mapped;
  for (const auto& [u, v] : g.arrows())
    mapped.emplace_back(a.image[static_cast<std::size_t>(u)], a.image[static_cast<std::size_t>(v)]);
  std::sort(mapped.begin(), mapped.end());
  if (mapped != g.arrows()) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (a.image[static_cast<std::size_t>(g.tau(static_cast<int>(i)))] != g.tau(a.image[i])) return false;
  return true;
}

// All translation-quiver automorphisms, by backtracking along a spanning
// order of the (arrow + tau) graph. Sorted lexicographically.
inline std::vector<QuiverAutomorphism> automorphisms(const StableTranslationQuiver& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& [u, v] : g.arrows()) ++mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];

  std::vector<int> orbit_len(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int len = 1;
    for (int j = g.tau(i); j != i; j = g.tau(j)) ++len;
    orbit_len[static_cast<std::size_t>(i)] = len;
  }
  auto signature = [&](int i) {
    return std::tuple(g.in(i).size(), g.out(i).size(), orbit_len[static_cast<std::size_t>(i)]);
  };

  // Spanning order: each non-root vertex records how it hangs off an earlier
  // vertex (0: out-neighbour, 1: in-neighbour, 2: tau image, 3: tau preimage).
  struct Step {
    int vertex;
    int parent;
    int relation;
  };
  std::vector<Step> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<int> tau_inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tau_inv[static_cast<std::size_t>(g.tau(i))] = i;
  for (int root = 0; root < n; ++root) {
    if (placed[static_cast<std::size_t>(root)]) continue;
    placed[static_cast<std::size_t>(root)] = true;
    order.push_back({root, -1, -1});
    for (std::size_t k = order.size() - 1; k < order.size(); ++k) {
      const int u = order[k].vertex;
      auto visit = [&](int v, int rel) {
        if (!placed[static_cast<std::size_t>(v)]) {
          placed[static_cast<std::size_t>(v)] = true;
          order.push_back({v, u, rel});
        }
      };
      for (int v : g.out(u)) visit(v, 0);
      for (int v : g.in(u)) visit(v, 1);
      visit(g.tau(u), 2);
      visit(tau_inv[static_cast<std::size_t>(u)], 3);
    }
  }

  std::vector<QuiverAutomorphism> result;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto consistent = [&](int v, int w) {
    if (used[static_cast<std::size_t>(w)] || signature(v) != signature(w)) return false;
    for (int u = 0; u < n; ++u) {
      const int iu = image[static_cast<std::size_t>(u)];
      if (iu < 0) continue;
      if (mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != mult[static_cast<std::size_t>(iu)][static_cast<std::size_t>(w)]) return false;
      if (mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] != mult[static_cast<std::size_t>(w)][static_cast<std::size_t>(iu)]) return false;
    }
    const int tv = g.tau(v);
    if (image[static_cast<std::size_t>(tv)] >= 0 && image[static_cast<std::size_t>(tv)] != g.tau(w)) return false;
    if (tv == v && g.tau(w) != w) return false;
    const int tiv = tau_inv[static_cast<std::size_t>(v)];
    if (image[static_cast<std::size_t>(tiv)] >= 0 && image[static_cast<std::size_t>(tiv)] != tau_inv[static_cast<std::size_t>(w)]) return false;
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      result.push_back({image});
      return;
    }
    const auto& step = order[k];
    std::vector<int> candidates;
    if (step.parent < 0) {
      for (int w = 0; w < n; ++w) candidates.push_back(w);
    } else {
      const int pw = image[static_cast<std::size_t>(step.parent)];
      switch (step.relation) {
        case 0: candidates = g.out(pw); break;
        case 1: candidates = g.in(pw); break;
        case 2: candidates = {g.tau(pw)}; break;
        default: candidates = {tau_inv[static_cast<std::size_t>(pw)]}; break;
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    for (int w : candidates) {
      if (!consistent(step.vertex, w)) continue;
      image[static_cast<std::size_t>(step.vertex)] = w;
      used[static_cast<std::size_t>(w)] = true;
      self(self, k + 1);
      image[static_cast<std::size_t>(step.vertex)] = -1;
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  recurse(recurse, 0);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace smsw
