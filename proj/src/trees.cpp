#include "rrp/trees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rrp {

DecoratedTree DecoratedTree::node(int d, std::vector<DecoratedTree> ch) {
  std::sort(ch.begin(), ch.end());
  return DecoratedTree{d, std::move(ch)};
}

int DecoratedTree::size() const {
  int n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

std::string DecoratedTree::canonical_key() const {
  std::string s = std::to_string(dec);
  if (!children.empty()) {
    s += "(";
    for (const auto& c : children) s += c.canonical_key() + ",";
    s += ")";
  }
  return s;
}

bool operator<(const DecoratedTree& a, const DecoratedTree& b) {
  if (a.dec != b.dec) return a.dec < b.dec;
  return a.children < b.children;
}

bool operator==(const DecoratedTree& a, const DecoratedTree& b) {
  return a.dec == b.dec && a.children == b.children;
}

Forest make_forest(std::vector<DecoratedTree> trees) {
  std::sort(trees.begin(), trees.end());
  return trees;
}

Forest forest_product(const Forest& a, const Forest& b) {
  Forest r = a;
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.begin(), r.end());
  return r;
}

std::string forest_key(const Forest& f) {
  std::string s;
  for (const auto& t : f) s += t.canonical_key() + ".";
  return s.empty() ? "1" : s;
}

int forest_size(const Forest& f) {
  int n = 0;
  for (const auto& t : f) n += t.size();
  return n;
}

bool TreeView::is_ancestor(int anc, int v) const {
  for (int p = parent[v]; p >= 0; p = parent[p])
    if (p == anc) return true;
  return false;
}

static void append_view(const DecoratedTree& t, int par, TreeView& out) {
  int id = (int)out.parent.size();
  out.parent.push_back(par);
  out.dec.push_back(t.dec);
  for (const auto& c : t.children) append_view(c, id, out);
}

TreeView to_view(const DecoratedTree& t) {
  TreeView v;
  append_view(t, -1, v);
  return v;
}

TreeView to_view(const Forest& f) {
  TreeView v;
  for (const auto& t : f) append_view(t, -1, v);
  return v;
}

static DecoratedTree build_canonical(int v, const std::vector<std::vector<int>>& kids,
                                     const std::vector<int>& dec) {
  std::vector<DecoratedTree> ch;
  ch.reserve(kids[v].size());
  for (int w : kids[v]) ch.push_back(build_canonical(w, kids, dec));
  return DecoratedTree::node(dec[v], std::move(ch));
}

Forest forest_from_parent_map(const std::vector<int>& parent,
                              const std::vector<int>& dec) {
  const int n = (int)parent.size();
  if ((int)dec.size() != n) throw std::invalid_argument("parent/decoration size mismatch");
  std::vector<std::vector<int>> kids(n);
  std::vector<int> roots;
  for (int v = 0; v < n; ++v) {
    if (parent[v] < 0) {
      roots.push_back(v);
    } else if (parent[v] >= n || parent[v] == v) {
      throw std::invalid_argument("bad parent index");
    } else {
      kids[parent[v]].push_back(v);
    }
  }
  if (roots.empty() && n > 0) throw std::invalid_argument("no root");
  // acyclicity: walking up from each vertex must terminate
  for (int v = 0; v < n; ++v) {
    int p = v, steps = 0;
    while (p >= 0) {
      p = parent[p];
      if (++steps > n) throw std::invalid_argument("parent map has a cycle");
    }
  }
  std::vector<DecoratedTree> trees;
  trees.reserve(roots.size());
  for (int r : roots) trees.push_back(build_canonical(r, kids, dec));
  return make_forest(std::move(trees));
}

DecoratedTree tree_from_parent_map(const std::vector<int>& parent,
                                   const std::vector<int>& dec) {
  Forest f = forest_from_parent_map(parent, dec);
  if (f.size() != 1) throw std::invalid_argument("expected exactly one root");
  return f[0];
}

// Enumerate multisets of child trees with total size budget, children drawn
// from the pool in non-decreasing order to avoid duplicates.
static void child_multisets(const std::vector<std::vector<DecoratedTree>>& by_size,
                            int budget, std::size_t min_size, std::size_t min_idx,
                            std::vector<DecoratedTree>& acc,
                            std::vector<std::vector<DecoratedTree>>& out) {
  if (budget == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t s = min_size; s < by_size.size(); ++s) {
    if ((int)s > budget) break;
    std::size_t start = (s == min_size) ? min_idx : 0;
    for (std::size_t i = start; i < by_size[s].size(); ++i) {
      acc.push_back(by_size[s][i]);
      child_multisets(by_size, budget - (int)s, s, i, acc, out);
      acc.pop_back();
    }
  }
}

std::vector<DecoratedTree> enumerate_trees(int n, int d) {
  // by_size[k] = all canonical trees with k vertices
  std::vector<std::vector<DecoratedTree>> by_size(n + 1);
  for (int k = 1; k <= n; ++k) {
    for (int dec = 1; dec <= d; ++dec) {
      std::vector<std::vector<DecoratedTree>> sets;
      std::vector<DecoratedTree> acc;
      child_multisets(by_size, k - 1, 1, 0, acc, sets);
      for (auto& ch : sets)
        by_size[k].push_back(DecoratedTree::node(dec, ch));
    }
    std::sort(by_size[k].begin(), by_size[k].end());
  }
  return by_size[n];
}

}  // namespace rrp
