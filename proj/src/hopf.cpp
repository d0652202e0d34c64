#include "rrp/hopf.hpp"

#include <functional>
#include <map>

namespace rrp {

std::vector<std::vector<int>> admissible_cuts(const TreeView& view) {
  const int n = view.size();
  // connected(v,w): v==w or one is an ancestor of the other
  std::vector<std::vector<char>> conn(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      conn[v][w] = (v == w) || view.is_ancestor(v, w) || view.is_ancestor(w, v);

  std::vector<std::vector<int>> cuts;
  std::vector<int> cur;
  // vertices are in preorder, so extending by increasing id is enough
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

std::pair<Forest, Forest> cut_split(const TreeView& view, const std::vector<int>& cut) {
  const int n = view.size();
  std::vector<char> in_lea(n, 0);
  for (int v : cut) {
    in_lea[v] = 1;
    for (int w = 0; w < n; ++w)
      if (view.is_ancestor(v, w)) in_lea[w] = 1;
  }
  std::vector<int> roo_parent, roo_dec, lea_parent, lea_dec;
  std::vector<int> newid(n, -1);
  for (int v = 0; v < n; ++v) {
    auto& par = in_lea[v] ? lea_parent : roo_parent;
    auto& dec = in_lea[v] ? lea_dec : roo_dec;
    newid[v] = (int)par.size();
    int p = view.parent[v];
    // a vertex keeps its parent only if the parent lies on the same side
    if (p >= 0 && in_lea[p] == in_lea[v])
      par.push_back(newid[p]);
    else
      par.push_back(-1);
    dec.push_back(view.dec[v]);
  }
  return {forest_from_parent_map(roo_parent, roo_dec),
          forest_from_parent_map(lea_parent, lea_dec)};
}

TensorHH coproduct(const Forest& f) {
  TreeView view = to_view(f);
  TensorHH out;
  for (const auto& cut : admissible_cuts(view))
    out.add(cut_split(view, cut), Rational(1));
  return out;
}

TensorHH coproduct(const DecoratedTree& t) { return coproduct(Forest{t}); }

TensorHH coproduct(const LinearComb<Forest>& x) {
  TensorHH out;
  for (const auto& [f, c] : x) out.add(coproduct(f), c);
  return out;
}

namespace {

LinearComb<Forest> antipode_tree(const DecoratedTree& t,
                                 std::map<std::string, LinearComb<Forest>>& memo);

LinearComb<Forest> antipode_forest(const Forest& f,
                                   std::map<std::string, LinearComb<Forest>>& memo) {
  LinearComb<Forest> acc{Forest{}};  // empty forest = unit
  for (const auto& t : f) {
    LinearComb<Forest> st = antipode_tree(t, memo);
    LinearComb<Forest> next;
    for (const auto& [fa, ca] : acc)
      for (const auto& [fb, cb] : st)
        next.add(forest_product(fa, fb), ca * cb);
    acc = next;
  }
  return acc;
}

// S(T) = -T - sum over proper cuts of Roo(T) . S(Lea(T))
LinearComb<Forest> antipode_tree(const DecoratedTree& t,
                                 std::map<std::string, LinearComb<Forest>>& memo) {
  auto key = t.canonical_key();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  TreeView view = to_view(t);
  LinearComb<Forest> out(Forest{t}, Rational(-1));
  for (const auto& cut : admissible_cuts(view)) {
    if (cut.empty()) continue;
    auto [roo, lea] = cut_split(view, cut);
    if (roo.empty()) continue;  // the root cut reproduces S(T) itself
    LinearComb<Forest> slea = antipode_forest(lea, memo);
    for (const auto& [fl, cl] : slea)
      out.add(forest_product(roo, fl), -cl);
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace

LinearComb<Forest> antipode(const Forest& f) {
  std::map<std::string, LinearComb<Forest>> memo;
  return antipode_forest(f, memo);
}

LinearComb<Forest> antipode(const DecoratedTree& t) { return antipode(Forest{t}); }

LinearComb<Forest> antipode(const LinearComb<Forest>& x) {
  LinearComb<Forest> out;
  for (const auto& [f, c] : x) out.add(antipode(f), c);
  return out;
}

Rational counit(const LinearComb<Forest>& x) { return x.coeff(Forest{}); }

LinearComb<Forest> antipode_check_left(const Forest& f) {
  LinearComb<Forest> out;
  for (const auto& [pair, c] : coproduct(f)) {
    LinearComb<Forest> s = antipode(pair.first);
    for (const auto& [fs, cs] : s) out.add(forest_product(fs, pair.second), c * cs);
  }
  return out;
}

LinearComb<Forest> antipode_check_right(const Forest& f) {
  LinearComb<Forest> out;
  for (const auto& [pair, c] : coproduct(f)) {
    LinearComb<Forest> s = antipode(pair.second);
    for (const auto& [fs, cs] : s) out.add(forest_product(pair.first, fs), c * cs);
  }
  return out;
}

}  // namespace rrp
