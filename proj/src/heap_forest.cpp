#include "rrp/heap_forest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace rrp {

bool operator<(const HeapForest& a, const HeapForest& b) { return a.parent < b.parent; }
bool operator==(const HeapForest& a, const HeapForest& b) { return a.parent == b.parent; }

HeapForest trunk_chain(int n) {
  HeapForest f;
  f.parent.resize(n);
  for (int i = 0; i < n; ++i) f.parent[i] = i - 1;
  return f;
}

HeapForest wedge(const HeapForest& a, const HeapForest& b) {
  HeapForest r = a;
  int na = a.size();
  for (int v = 0; v < b.size(); ++v)
    r.parent.push_back(b.parent[v] < 0 ? -1 : b.parent[v] + na);
  return r;
}

bool LabeledForest::is_ancestor(int i, int j) const {
  for (int p = par[j]; p >= 0; p = par[p])
    if (p == i) return true;
  return false;
}

bool operator<(const LabeledForest& a, const LabeledForest& b) {
  if (a.verts != b.verts) return a.verts < b.verts;
  return a.par < b.par;
}
bool operator==(const LabeledForest& a, const LabeledForest& b) {
  return a.verts == b.verts && a.par == b.par;
}

LabeledForest as_labeled(const HeapForest& f) {
  LabeledForest out;
  out.verts.resize(f.size());
  for (int i = 0; i < f.size(); ++i) out.verts[i] = i;
  out.par = f.parent;
  return out;
}

LabeledForest labeled_union(const LabeledForest& a, const LabeledForest& b) {
  LabeledForest out;
  out.verts = a.verts;
  out.verts.insert(out.verts.end(), b.verts.begin(), b.verts.end());
  std::vector<int> order(out.verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return out.verts[i] < out.verts[j]; });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = (int)i;

  std::vector<int> verts(out.verts.size()), par(out.verts.size());
  const int na = a.size();
  for (std::size_t i = 0; i < order.size(); ++i) {
    int src = order[i];
    verts[i] = out.verts[src];
    int p = src < na ? a.par[src] : b.par[src - na] < 0 ? -1 : b.par[src - na] + na;
    par[i] = p < 0 ? -1 : rank[p];
  }
  out.verts = std::move(verts);
  out.par = std::move(par);
  return out;
}

std::vector<LabeledForest> components(const LabeledForest& f) {
  const int n = f.size();
  std::vector<int> root_of(n);
  for (int v = 0; v < n; ++v) {
    int r = v;
    while (f.par[r] >= 0) r = f.par[r];
    root_of[v] = r;
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[root_of[v]].push_back(v);

  std::vector<LabeledForest> out;
  for (auto& [root, idxs] : groups) {
    LabeledForest c;
    std::vector<int> newid(n, -1);
    for (int i : idxs) {
      newid[i] = (int)c.verts.size();
      c.verts.push_back(f.verts[i]);
      c.par.push_back(f.par[i] < 0 ? -1 : newid[f.par[i]]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> admissible_cuts(const LabeledForest& f) {
  const int n = f.size();
  std::vector<std::vector<char>> conn(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      conn[v][w] = (v == w) || f.is_ancestor(v, w) || f.is_ancestor(w, v);

  std::vector<std::vector<int>> cuts;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    cuts.push_back(cur);
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (conn[u][v]) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return cuts;
}

std::pair<LabeledForest, LabeledForest> cut_split(const LabeledForest& f,
                                                  const std::vector<int>& cut) {
  const int n = f.size();
  std::vector<char> in_lea(n, 0);
  for (int v : cut) {
    in_lea[v] = 1;
    for (int w = 0; w < n; ++w)
      if (f.is_ancestor(v, w)) in_lea[w] = 1;
  }
  LabeledForest roo, lea;
  std::vector<int> newid(n, -1);
  for (int v = 0; v < n; ++v) {
    LabeledForest& dst = in_lea[v] ? lea : roo;
    newid[v] = dst.size();
    dst.verts.push_back(f.verts[v]);
    int p = f.par[v];
    dst.par.push_back(p >= 0 && in_lea[p] == in_lea[v] ? newid[p] : -1);
  }
  return {roo, lea};
}

namespace {

bool is_single_tree(const LabeledForest& f) {
  int roots = 0;
  for (int p : f.par) roots += (p < 0);
  return roots == 1;
}

LinearComb<LabeledForest> antipode_rec(const LabeledForest& f) {
  if (f.size() == 0) return LinearComb<LabeledForest>(LabeledForest{});
  if (!is_single_tree(f)) {
    auto comps = components(f);
    LinearComb<LabeledForest> acc(LabeledForest{});
    for (const auto& c : comps) {
      LinearComb<LabeledForest> sc = antipode_rec(c);
      LinearComb<LabeledForest> next;
      for (const auto& [fa, ca] : acc)
        for (const auto& [fb, cb] : sc)
          next.add(labeled_union(fa, fb), ca * cb);
      acc = next;
    }
    return acc;
  }
  LinearComb<LabeledForest> out(f, Rational(-1));
  for (const auto& cut : admissible_cuts(f)) {
    if (cut.empty()) continue;
    auto [roo, lea] = cut_split(f, cut);
    if (roo.size() == 0) continue;
    LinearComb<LabeledForest> slea = antipode_rec(lea);
    for (const auto& [fl, cl] : slea)
      out.add(labeled_union(roo, fl), -cl);
  }
  return out;
}

}  // namespace

LinearComb<LabeledForest> antipode(const LabeledForest& f) { return antipode_rec(f); }

LinearComb<HeapForest> permutation_graph(int n, const std::vector<int>& sigma) {
  if ((int)sigma.size() != n) throw std::invalid_argument("sigma size mismatch");
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[sigma[i]] = i;

  HeapForest chain;
  chain.parent.assign(n, -1);
  for (int k = 1; k < n; ++k) chain.parent[inv[k]] = inv[k - 1];

  LinearComb<HeapForest> out;
  std::vector<std::pair<int, HeapForest>> work{{1, chain}};
  while (!work.empty()) {
    auto [sign, f] = work.back();
    work.pop_back();
    int c = -1;
    for (int v = 0; v < n; ++v)
      if (f.parent[v] > v) { c = v; break; }
    if (c < 0) {
      out.add(f, Rational(sign));
      continue;
    }
    int p = f.parent[c];
    int up = f.parent[p];
    HeapForest raised = f;    // child re-attached next to p
    raised.parent[c] = up;
    HeapForest swapped = f;   // x_p < x_c < x_up(p): p becomes child of c
    swapped.parent[c] = up;
    swapped.parent[p] = c;
    work.push_back({sign, raised});
    work.push_back({-sign, swapped});
  }
  return out;
}

std::vector<HeapForest> enumerate_heap_forests(int n) {
  std::vector<HeapForest> out;
  HeapForest cur;
  cur.parent.assign(n, -1);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) { out.push_back(cur); return; }
    for (int p = -1; p < v; ++p) {
      cur.parent[v] = p;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace rrp
