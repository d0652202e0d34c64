#include "rrp/forests.hpp"

#include <algorithm>
#include <functional>

namespace rrp {

namespace {

// factor arg with the zeroed zeta symbols dropped
MomentumForm drop_zeroed(const MomentumForm& f, const std::vector<int>& zeroed) {
  MomentumForm out;
  for (const auto& [k, c] : f)
    if (std::find(zeroed.begin(), zeroed.end(), k) == zeroed.end()) out.emplace(k, c);
  return out;
}

bool line_in_member(const HalfDiagram& d, const BphzMember& g, const LineId& l) {
  return g.lines.lines.count(l) > 0;
  (void)d;
}

Subgraph induced_lines(const HalfDiagram& d, const std::vector<int>& verts) {
  std::vector<char> in(d.n(), 0);
  for (int v : verts) in[v] = 1;
  Subgraph g;
  for (int v : verts) {
    int p = d.forest.parent[v];
    if (p >= 0 && in[p]) g.lines.insert({LineId::SigmaEdge, v});
    if (p < 0) g.lines.insert({LineId::RootLeg, v});
    g.lines.insert({LineId::PhiLeg, d.phi_line_vertex(v)});
  }
  return g;
}

}  // namespace

std::vector<BphzMember> divergent_members(const HalfDiagram& d) {
  const int n = d.n();
  // adjacency through sigma-edges and contractions
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v)
    if (d.forest.parent[v] >= 0) {
      adj[v].push_back(d.forest.parent[v]);
      adj[d.forest.parent[v]].push_back(v);
    }
  for (const auto& [a, b] : d.contractions) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // connected vertex subsets, enumerated once each (exclusion-set scheme)
  std::vector<std::vector<int>> subsets;
  std::vector<char> in_set(n, 0), excluded(n, 0);
  std::vector<int> members;
  std::function<void()> grow = [&]() {
    subsets.push_back(members);
    std::vector<int> cands;
    for (int i : members)
      for (int j : adj[i])
        if (!in_set[j] && !excluded[j]) cands.push_back(j);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<int> newly;
    for (int j : cands) {
      members.push_back(j);
      in_set[j] = 1;
      grow();
      in_set[j] = 0;
      members.pop_back();
      excluded[j] = 1;
      newly.push_back(j);
    }
    for (int j : newly) excluded[j] = 0;
  };
  for (int seed = 0; seed < n; ++seed) {
    members = {seed};
    in_set[seed] = 1;
    grow();
    in_set[seed] = 0;
    excluded[seed] = 1;
  }
  std::fill(excluded.begin(), excluded.end(), 0);

  std::vector<BphzMember> out;
  for (auto& verts : subsets) {
    std::sort(verts.begin(), verts.end());
    std::vector<char> in(n, 0);
    for (int v : verts) in[v] = 1;

    // no contraction may cross the boundary (external phi-leg)
    bool crossing = false;
    for (const auto& [a, b] : d.contractions)
      if (in[a] != in[b]) crossing = true;
    if (crossing) continue;

    BphzMember m;
    m.verts = verts;
    // boundary sigma-legs: the up-edge of each base vertex plus the edges
    // to children outside W
    for (int v : verts) {
      int p = d.forest.parent[v];
      if (p >= 0 && !in[p]) m.zeroed.push_back(v);
      for (int c : d.children[v])
        if (!in[c]) m.zeroed.push_back(c);
    }
    if (m.zeroed.empty()) {
      // whole trees absorbed: the root legs are the only external legs
      bool whole_diagram_trivial = true;
      for (int v : verts)
        if (d.forest.parent[v] < 0) m.zeroed.push_back(v);
      (void)whole_diagram_trivial;
    }
    std::sort(m.zeroed.begin(), m.zeroed.end());
    m.lines = induced_lines(d, verts);

    // drop members whose own |xi| factor is killed identically
    bool dead = false;
    for (int v : verts)
      if (d.phi_line_vertex(v) == v)
        if (drop_zeroed(d.xi_form(v), m.zeroed).empty()) dead = true;
    if (dead) continue;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const BphzMember& a, const BphzMember& b) { return a.verts < b.verts; });
  return out;
}

bool members_compatible(const BphzMember& a, const BphzMember& b) {
  std::vector<int> inter;
  std::set_intersection(a.verts.begin(), a.verts.end(), b.verts.begin(), b.verts.end(),
                        std::back_inserter(inter));
  if (inter.empty()) return true;
  if (inter.size() == a.verts.size() && a.verts.size() < b.verts.size()) return true;
  if (inter.size() == b.verts.size() && b.verts.size() < a.verts.size()) return true;
  return false;
}

std::vector<std::vector<int>> enumerate_forests(const std::vector<BphzMember>& members) {
  const int m = (int)members.size();
  std::vector<std::vector<char>> compat(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      compat[i][j] = compat[j][i] = members_compatible(members[i], members[j]);

  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    out.push_back(cur);
    for (int i = from; i < m; ++i) {
      bool ok = true;
      for (int j : cur)
        if (!compat[i][j]) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<Subgraph>> enumerate_divergent_forests(const HalfDiagram& d) {
  auto members = divergent_members(d);
  std::vector<std::vector<Subgraph>> out;
  for (const auto& f : enumerate_forests(members)) {
    std::vector<Subgraph> forest;
    for (int i : f) forest.push_back(members[i].lines);
    out.push_back(std::move(forest));
  }
  return out;
}

AmplitudeExpression bphz_renormalize(const HalfDiagram& h) {
  AmplitudeExpression e;
  e.diagram = h;
  e.members = divergent_members(h);
  auto base = feynman_factors(h);

  for (const auto& forest : enumerate_forests(e.members)) {
    ForestTerm t;
    t.sign = (forest.size() % 2) ? -1 : 1;
    t.members = forest;
    t.factors = base;
    for (auto& f : t.factors) {
      // the substitutions of the members owning this line commute: the
      // final arg drops the union of their zeroed symbols
      std::vector<int> zeroed;
      for (int gi : forest) {
        const auto& g = e.members[gi];
        if (line_in_member(h, g, f.line))
          zeroed.insert(zeroed.end(), g.zeroed.begin(), g.zeroed.end());
      }
      if (!zeroed.empty()) f.arg = drop_zeroed(f.arg, zeroed);
    }
    e.terms.push_back(std::move(t));
  }
  return e;
}

}  // namespace rrp
