#pragma once

// Hom-space dimensions in the mesh category k(ZQ) and in quotient mesh
// categories k(ZQ/Pi).
//
// Two routes compute Hom(x, -) in k(ZQ):
//   * hom_table_oracle: the path category modulo the mesh ideal, by exact
//     linear algebra. Paths into y != x end in a unique arrow u -> y, and the
//     mesh ideal at y is the image of Hom(x, tau y), so
//         Hom(x, y) = coker( Hom(x, tau y) -> (+)_{u -> y} Hom(x, u) ),
//     with the maps along arrows carried as matrices.
//   * hom_table_fast: the hammock recursion h(x) = 1,
//         h(y) = max(0, sum_{u -> y} h(u) - h(tau y)),
//     which only tracks dimensions. Its contract is agreement with the oracle.
//
// Quotient homs follow from the covering: Hom(pi e, pi f) is the sum of
// Hom(e, h) over the lifts h of pi f.

#include "smsw/dynkin.hpp"
#include "smsw/linalg.hpp"
#include "smsw/ztquiver.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace smsw {

// Dimensions of Hom(source, y) for y with level in [p_min, p_max].
struct HomTable {
  ZVertex source;
  int rank = 0;
  int p_min = 0;
  int p_max = -1;
  std::vector<int> dims;

  int at(ZVertex y) const {
    if (y.p < p_min || y.p > p_max) return 0;
    return dims[static_cast<std::size_t>((y.p - p_min) * rank + (y.q - 1))];
  }
  int& at_mut(ZVertex y) { return dims[static_cast<std::size_t>((y.p - p_min) * rank + (y.q - 1))]; }

  HomTable shifted(int dp) const {
    HomTable t = *this;
    t.source.p += dp;
    t.p_min += dp;
    t.p_max += dp;
    return t;
  }
};

// Levels of Hom(x, -) that are examined: [p(x), p(x) + 2 h].
inline int support_band(const DynkinGraph& g) { return 2 * coxeter_number(g); }

class WindowTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_window(const DynkinGraph& g, const QuiverWindow& w, ZVertex x, ZVertex y) {
  const int need = 2 * coxeter_number(g) + 2;
  if (w.p_max - w.p_min + 1 < need)
    throw WindowTooSmall("window has " + std::to_string(w.p_max - w.p_min + 1) + " slices, need at least " +
                         std::to_string(need));
  if (!w.contains(x) || !w.contains(y)) throw WindowTooSmall("vertex outside the window; enlarge the window");
}

namespace detail {
inline HomTable empty_table(const DynkinGraph& g, ZVertex x, int p_last) {
  HomTable t;
  t.source = x;
  t.rank = g.rank();
  t.p_min = x.p;
  t.p_max = p_last;
  t.dims.assign(static_cast<std::size_t>((p_last - x.p + 1) * g.rank()), 0);
  return t;
}
}  // namespace detail

template <typename F = Rational>
HomTable hom_table_oracle(const DynkinGraph& g, ZVertex x, int p_last) {
  HomTable t = detail::empty_table(g, x, p_last);
  const auto order = slice_order(g);
  std::map<std::pair<ZVertex, ZVertex>, Matrix<F>> arrow_maps;
  for (int p = x.p; p <= p_last; ++p) {
    for (int q : order) {
      const ZVertex y{p, q};
      if (y == x) {
        t.at_mut(y) = 1;
        continue;
      }
      std::vector<ZVertex> ins;
      std::size_t total = 0;
      for (const auto& u : predecessors(g, y)) {
        const int du = t.at(u);
        if (du > 0) {
          ins.push_back(u);
          total += static_cast<std::size_t>(du);
        }
      }
      if (total == 0) continue;
      const ZVertex ty = tau(y);
      const int dty = t.at(ty);
      Matrix<F> quotient_map;
      if (dty == 0) {
        quotient_map = Matrix<F>::identity(total);
      } else {
        Matrix<F> rel(total, static_cast<std::size_t>(dty));
        std::size_t off = 0;
        for (const auto& u : ins) {
          const int du = t.at(u);
          auto it = arrow_maps.find({ty, u});
          if (it != arrow_maps.end())
            for (int i = 0; i < du; ++i)
              for (int j = 0; j < dty; ++j)
                rel(off + static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = it->second(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
          off += static_cast<std::size_t>(du);
        }
        quotient_map = left_nullspace(rel);
      }
      const auto dy = quotient_map.rows();
      t.at_mut(y) = static_cast<int>(dy);
      if (dy == 0) continue;
      std::size_t off = 0;
      for (const auto& u : ins) {
        const auto du = static_cast<std::size_t>(t.at(u));
        arrow_maps[{u, y}] = quotient_map.columns(off, du);
        off += du;
      }
    }
  }
  return t;
}

inline HomTable hom_table_fast(const DynkinGraph& g, ZVertex x, int p_last) {
  HomTable t = detail::empty_table(g, x, p_last);
  const auto order = slice_order(g);
  for (int p = x.p; p <= p_last; ++p)
    for (int q : order) {
      const ZVertex y{p, q};
      if (y == x) {
        t.at_mut(y) = 1;
        continue;
      }
      int s = -t.at(tau(y));
      for (const auto& u : predecessors(g, y)) s += t.at(u);
      t.at_mut(y) = s > 0 ? s : 0;
    }
  return t;
}

template <typename F = Rational>
int hom_dim_oracle(const DynkinGraph& g, const QuiverWindow& w, ZVertex x, ZVertex y) {
  check_window(g, w, x, y);
  if (y.p < x.p) return 0;
  return hom_table_oracle<F>(g, x, y.p).at(y);
}

inline int hom_dim_fast(const DynkinGraph& g, const QuiverWindow& w, ZVertex x, ZVertex y) {
  check_window(g, w, x, y);
  if (y.p < x.p) return 0;
  return hom_table_fast(g, x, y.p).at(y);
}

// Memoised hammock tables Hom((0,q), -) over the full support band. Tables
// for other sources are translates. If SMSW_CACHE_DIR is set, tables are also
// persisted there as TSV.
class HammockCache {
 public:
  static HammockCache& instance() {
    static HammockCache cache;
    return cache;
  }

  HomTable table(const DynkinGraph& g, ZVertex x) {
    const auto key = std::make_pair(g.name(), x.q);
    {
      std::lock_guard lock(mutex_);
      auto it = tables_.find(key);
      if (it != tables_.end()) return it->second.shifted(x.p);
    }
    HomTable t = load_or_compute(g, x.q);
    {
      std::lock_guard lock(mutex_);
      tables_.emplace(key, t);  // idempotent: a concurrent fill computed the same table
    }
    return t.shifted(x.p);
  }

 private:
  static HomTable load_or_compute(const DynkinGraph& g, int q) {
    const char* dir = std::getenv("SMSW_CACHE_DIR");
    std::filesystem::path file;
    if (dir != nullptr && *dir != '\0') {
      file = std::filesystem::path(dir) / ("hammock_" + g.name() + "_" + std::to_string(q) + ".tsv");
      std::ifstream in(file);
      HomTable t = detail::empty_table(g, {0, q}, support_band(g));
      int p, qq, d;
      bool ok = static_cast<bool>(in);
      std::size_t count = 0;
      while (ok && in >> p >> qq >> d) {
        if (p < t.p_min || p > t.p_max || qq < 1 || qq > g.rank()) {
          ok = false;
          break;
        }
        t.at_mut({p, qq}) = d;
        ++count;
      }
      if (ok && count == t.dims.size()) return t;
    }
    HomTable t = hom_table_fast(g, {0, q}, support_band(g));
    const int h = coxeter_number(g);
    for (int p = h + 1; p <= t.p_max; ++p)
      for (int qq = 1; qq <= g.rank(); ++qq)
        if (t.at({p, qq}) != 0)
          throw std::logic_error("hammock of " + g.name() + " leaves the inner half of the support band");
    if (!file.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(file.parent_path(), ec);
      std::ofstream out(file);
      for (int p = t.p_min; p <= t.p_max; ++p)
        for (int qq = 1; qq <= g.rank(); ++qq) out << p << '\t' << qq << '\t' << t.at({p, qq}) << '\n';
    }
    return t;
  }

  std::mutex mutex_;
  std::map<std::pair<std::string, int>, HomTable> tables_;
};

// Row e of the quotient hom matrix: dim Hom(e, f) for every vertex f,
// summing over lifts inside the support band above the canonical lift of e.
inline std::vector<int> quotient_hom_row(const StableTranslationQuiver& gam, int e, int band) {
  const ZVertex x = gam.vertex(e);
  const HomTable t = HammockCache::instance().table(gam.graph(), x);
  std::vector<int> row(gam.size(), 0);
  const int last = std::min(t.p_max, x.p + band);
  for (int p = x.p; p <= last; ++p)
    for (int q = 1; q <= gam.graph().rank(); ++q) {
      const int d = t.at({p, q});
      if (d != 0) row[static_cast<std::size_t>(gam.index_of({p, q}))] += d;
    }
  return row;
}

inline int quotient_hom_dim(const StableTranslationQuiver& gam, int e, int f) {
  return quotient_hom_row(gam, e, support_band(gam.graph()))[static_cast<std::size_t>(f)];
}

// Full matrix H[e][f] = dim Hom_{k(Gamma)}(e, f).
inline std::vector<std::vector<int>> quotient_hom_matrix(const StableTranslationQuiver& gam) {
  std::vector<std::vector<int>> h;
  h.reserve(gam.size());
  for (std::size_t e = 0; e < gam.size(); ++e)
    h.push_back(quotient_hom_row(gam, static_cast<int>(e), support_band(gam.graph())));
  return h;
}

}  // namespace smsw
