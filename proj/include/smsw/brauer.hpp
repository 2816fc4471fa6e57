#pragma once

// Brauer trees up to isomorphism: plane trees (cyclic order of edges around
// each vertex, isomorphisms preserve it) with an optional exceptional vertex.
//
// Every plane tree with d edges arises from a rooted one, i.e. a Dyck word of
// length 2d. Re-rooting at each dart and taking the least Dyck word gives a
// canonical form; counting distinct canonical forms counts trees.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace smsw {

class PlaneTree {
 public:
  // '1' descends to a new child, '0' returns to the parent.
  explicit PlaneTree(const std::string& dyck) {
    rotation_.emplace_back();
    std::vector<int> stack{0};
    for (char c : dyck) {
      if (c == '1') {
        const int child = static_cast<int>(rotation_.size());
        rotation_.emplace_back();
        rotation_.back().push_back(stack.back());
        rotation_[static_cast<std::size_t>(stack.back())].push_back(child);
        stack.push_back(child);
      } else {
        if (stack.size() < 2) throw std::invalid_argument("PlaneTree: not a Dyck word");
        stack.pop_back();
      }
    }
    if (stack.size() != 1) throw std::invalid_argument("PlaneTree: not a Dyck word");
  }

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t degree(int v) const { return rotation_[static_cast<std::size_t>(v)].size(); }

  // Dyck word of the tree rooted at v, with the edge to rotation_[v][k] first.
  std::string word_from(int v, std::size_t k) const {
    std::string out;
    const auto& nb = rotation_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < nb.size(); ++i) encode(nb[(k + i) % nb.size()], v, out);
    return out;
  }

  std::string canonical_at(int v) const {
    std::string best;
    for (std::size_t k = 0; k < degree(v); ++k) {
      auto w = word_from(v, k);
      if (best.empty() || w < best) best = w;
    }
    return best;
  }

  std::string canonical() const {
    std::string best;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      auto w = canonical_at(static_cast<int>(v));
      if (best.empty() || w < best) best = w;
    }
    return best;
  }

 private:
  void encode(int v, int parent, std::string& out) const {
    out.push_back('1');
    const auto& nb = rotation_[static_cast<std::size_t>(v)];
    const auto at = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), parent) - nb.begin());
    for (std::size_t i = 1; i < nb.size(); ++i) encode(nb[(at + i) % nb.size()], v, out);
    out.push_back('0');
  }

  std::vector<std::vector<int>> rotation_;
};

inline std::vector<std::string> dyck_words(int edges) {
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, int open, int close) -> void {
    if (open == edges && close == edges) {
      out.push_back(cur);
      return;
    }
    if (open < edges) {
      cur.push_back('1');
      self(self, open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back('0');
      self(self, open, close + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Trees with `edges` edges; multiplicity 1 carries no exceptional vertex,
// multiplicity > 1 marks one vertex as exceptional.
inline std::size_t count_brauer_trees(int edges, int multiplicity) {
  if (edges < 1 || multiplicity < 1) throw std::invalid_argument("count_brauer_trees: edges and multiplicity must be >= 1");
  std::set<std::string> forms;
  for (const auto& w : dyck_words(edges)) {
    PlaneTree t(w);
    if (multiplicity == 1) {
      forms.insert(t.canonical());
    } else {
      for (std::size_t v = 0; v < t.vertex_count(); ++v) forms.insert(t.canonical_at(static_cast<int>(v)));
    }
  }
  return forms.size();
}

// Multiplicity-1 trees with a chosen extremal (degree one) vertex.
inline std::size_t count_brauer_trees_marked_leaf(int edges) {
  if (edges < 1) throw std::invalid_argument("count_brauer_trees_marked_leaf: edges must be >= 1");
  std::set<std::string> forms;
  for (const auto& w : dyck_words(edges)) {
    PlaneTree t(w);
    for (std::size_t v = 0; v < t.vertex_count(); ++v)
      if (t.degree(static_cast<int>(v)) == 1) forms.insert(t.canonical_at(static_cast<int>(v)));
  }
  return forms.size();
}

}  // namespace smsw
