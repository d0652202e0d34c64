#include "rrp/diagram.hpp"

#include <algorithm>
#include <functional>

#include "rrp/errors.hpp"

namespace rrp {

MomentumForm operator+(const MomentumForm& a, const MomentumForm& b) {
  MomentumForm r = a;
  for (const auto& [k, c] : b) {
    auto it = r.find(k);
    if (it == r.end()) {
      r.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

MomentumForm operator-(const MomentumForm& a, const MomentumForm& b) {
  MomentumForm neg;
  for (const auto& [k, c] : b) neg.emplace(k, -c);
  return a + neg;
}

std::string form_str(const MomentumForm& f) {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : f) {
    if (!s.empty() || c < Rational(0)) s += (c < Rational(0)) ? "-" : "+";
    Rational a = c < Rational(0) ? -c : c;
    if (!(a == Rational(1))) s += a.str() + "*";
    s += "z" + std::to_string(k + 1);
  }
  return s;
}

std::string line_str(const LineId& l) {
  switch (l.kind) {
    case LineId::SigmaEdge: return "sigma:" + std::to_string(l.v + 1);
    case LineId::RootLeg: return "root:" + std::to_string(l.v + 1);
    default: return "phi:" + std::to_string(l.v + 1);
  }
}

int HalfDiagram::phi_line_vertex(int v) const {
  if (pair_of[v] < 0) return v;
  const auto& p = contractions[pair_of[v]];
  return std::min(p.first, p.second);
}

std::vector<LineId> HalfDiagram::all_lines() const {
  std::vector<LineId> out;
  for (int v = 0; v < n(); ++v) {
    if (forest.parent[v] >= 0)
      out.push_back({LineId::SigmaEdge, v});
    else
      out.push_back({LineId::RootLeg, v});
    if (phi_line_vertex(v) == v) out.push_back({LineId::PhiLeg, v});
  }
  return out;
}

MomentumForm HalfDiagram::zeta_form(int v) const { return MomentumForm{{v, Rational(1)}}; }

MomentumForm HalfDiagram::xi_form(int v) const {
  MomentumForm f = zeta_form(v);
  for (int c : children[v]) f = f - zeta_form(c);
  return f;
}

std::vector<MomentumForm> HalfDiagram::constraints() const {
  std::vector<MomentumForm> out;
  for (const auto& [a, b] : contractions) out.push_back(xi_form(a) + xi_form(b));
  return out;
}

MomentumForm HalfDiagram::external_balance() const {
  MomentumForm f;
  for (int r : roots) f = f + zeta_form(r);
  for (int v = 0; v < n(); ++v)
    if (!contracted(v)) f = f - xi_form(v);
  return f;
}

HalfDiagram build_half_diagram(const HeapForest& forest,
                               const std::vector<std::pair<int, int>>& contractions) {
  HalfDiagram d;
  d.forest = forest;
  d.contractions = contractions;
  const int n = d.n();
  d.children.resize(n);
  d.pair_of.assign(n, -1);
  d.pair_sign.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    int p = forest.parent[v];
    if (p >= 0)
      d.children[p].push_back(v);
    else
      d.roots.push_back(v);
  }
  for (std::size_t i = 0; i < contractions.size(); ++i) {
    auto [a, b] = contractions[i];
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw InvalidContraction("contraction endpoints out of range");
    if (d.pair_of[a] >= 0 || d.pair_of[b] >= 0)
      throw InvalidContraction("contraction pairs overlap");
    d.pair_of[a] = d.pair_of[b] = (int)i;
    d.pair_sign[a] = 1;
    d.pair_sign[b] = -1;
  }
  return d;
}

bool SymmetricDiagram::bilateral() const {
  for (int v = 0; v < half.n(); ++v)
    if (!half.contracted(v)) return true;
  return false;
}

bool SymmetricDiagram::totally_contracted() const { return !bilateral(); }

bool SymmetricDiagram::zero_by_symmetry() const {
  if (!totally_contracted()) return false;
  // connected with a single root: zeta_ext = zeta_root is forced to zero,
  // and the integrand is odd under negating all momenta iff the number of
  // internal sigma-lines per side is odd
  if (half.roots.size() != 1) return false;
  int sigma_lines = half.n() - (int)half.roots.size();
  return sigma_lines % 2 == 1;
}

std::set<int> Subgraph::vertices(const HalfDiagram& d) const {
  std::set<int> out;
  for (const auto& l : lines) {
    out.insert(l.v);
    if (l.kind == LineId::SigmaEdge) out.insert(d.forest.parent[l.v]);
    if (l.kind == LineId::PhiLeg && d.contracted(l.v)) {
      const auto& p = d.contractions[d.pair_of[l.v]];
      out.insert(p.first);
      out.insert(p.second);
    }
  }
  return out;
}

std::vector<LineId> Subgraph::external_legs(const HalfDiagram& d) const {
  std::set<int> verts = vertices(d);
  std::vector<LineId> out;
  for (const auto& l : d.all_lines()) {
    if (lines.count(l)) continue;
    bool touches = false;
    if (l.kind == LineId::SigmaEdge)
      touches = verts.count(l.v) || verts.count(d.forest.parent[l.v]);
    else if (l.kind == LineId::RootLeg)
      touches = verts.count(l.v) > 0;
    else {
      touches = verts.count(l.v) > 0;
      if (d.contracted(l.v)) {
        const auto& p = d.contractions[d.pair_of[l.v]];
        touches = verts.count(p.first) || verts.count(p.second);
      }
    }
    if (touches) out.push_back(l);
  }
  return out;
}

bool Subgraph::has_external_phi(const HalfDiagram& d) const {
  for (const auto& l : external_legs(d))
    if (l.kind == LineId::PhiLeg) return true;
  return false;
}

bool Subgraph::is_bilateral(const HalfDiagram& d) const {
  for (const auto& l : lines)
    if (l.kind == LineId::PhiLeg && !d.contracted(l.v)) return true;
  return false;
}

bool Subgraph::contains(const Subgraph& o) const {
  return std::includes(lines.begin(), lines.end(), o.lines.begin(), o.lines.end());
}

bool Subgraph::disjoint(const Subgraph& o) const {
  for (const auto& l : o.lines)
    if (lines.count(l)) return false;
  return true;
}

bool operator<(const Subgraph& a, const Subgraph& b) { return a.lines < b.lines; }
bool operator==(const Subgraph& a, const Subgraph& b) { return a.lines == b.lines; }

bool is_divergent(const HalfDiagram& d, const Subgraph& g) {
  return !g.has_external_phi(d);
}

namespace {

std::vector<std::vector<int>> line_adjacency(const HalfDiagram& d,
                                             const std::vector<LineId>& lines) {
  const int m = (int)lines.size();
  auto verts_of = [&](const LineId& l) {
    std::vector<int> v{l.v};
    if (l.kind == LineId::SigmaEdge) v.push_back(d.forest.parent[l.v]);
    if (l.kind == LineId::PhiLeg && d.contracted(l.v)) {
      const auto& p = d.contractions[d.pair_of[l.v]];
      v = {p.first, p.second};
    }
    return v;
  };
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto vi = verts_of(lines[i]), vj = verts_of(lines[j]);
      bool shared = false;
      for (int a : vi)
        for (int b : vj)
          if (a == b) shared = true;
      if (shared) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  return adj;
}

}  // namespace

std::vector<Subgraph> connected_subgraphs(const HalfDiagram& d) {
  auto lines = d.all_lines();
  auto adj = line_adjacency(d, lines);
  const int m = (int)lines.size();

  // standard connected-subset enumeration with an exclusion set: each
  // connected subset is produced exactly once, from its smallest line
  std::vector<Subgraph> out;
  std::vector<char> in_set(m, 0), excluded(m, 0);
  std::vector<int> members;
  std::function<void()> grow = [&]() {
    Subgraph g;
    for (int i : members) g.lines.insert(lines[i]);
    out.push_back(std::move(g));
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
  for (int seed = 0; seed < m; ++seed) {
    members = {seed};
    in_set[seed] = 1;
    grow();
    in_set[seed] = 0;
    excluded[seed] = 1;  // later seeds never reuse smaller lines
  }
  std::fill(excluded.begin(), excluded.end(), 0);
  return out;
}

int independent_momentum_count(const SymmetricDiagram& g) {
  const HalfDiagram& d = g.half;
  const int n = d.n();
  // internal lines of the doubled diagram: sigma edges and contracted
  // pairs once per side, bridges once
  std::vector<std::pair<LineId, int>> internal;  // (line, side 0/1)
  for (int v = 0; v < n; ++v) {
    if (d.forest.parent[v] >= 0) {
      internal.push_back({{LineId::SigmaEdge, v}, 0});
      internal.push_back({{LineId::SigmaEdge, v}, 1});
    }
    if (d.phi_line_vertex(v) == v) {
      if (d.contracted(v)) {
        internal.push_back({{LineId::PhiLeg, v}, 0});
        internal.push_back({{LineId::PhiLeg, v}, 1});
      } else {
        internal.push_back({{LineId::PhiLeg, v}, 0});  // bridge, shared
      }
    }
  }
  const int I = (int)internal.size();
  // conservation at each of the 2n vertices; external legs are fixed
  // numbers and do not enter the rank
  std::vector<std::vector<double>> rows;
  for (int side = 0; side < 2; ++side)
    for (int v = 0; v < n; ++v) {
      std::vector<double> row(I, 0.0);
      for (int i = 0; i < I; ++i) {
        auto [l, s] = internal[i];
        double coef = 0.0;
        if (l.kind == LineId::SigmaEdge) {
          if (s == side) {
            if (l.v == v) coef -= 1.0;                      // flows out of v
            if (d.forest.parent[l.v] == v) coef += 1.0;     // flows into parent
          }
        } else {
          // phi line: oriented out of the first endpoint
          int a = l.v, b = d.contracted(l.v) ? (d.contractions[d.pair_of[l.v]].first == l.v
                                                    ? d.contractions[d.pair_of[l.v]].second
                                                    : d.contractions[d.pair_of[l.v]].first)
                                             : -1;
          if (d.contracted(l.v)) {
            if (s == side) {
              if (v == a) coef -= 1.0;
              if (v == b) coef += 1.0;
            }
          } else {
            // bridge from v on side 0 to mirror on side 1
            if (v == l.v) coef += (side == 0 ? -1.0 : 1.0);
          }
        }
        row[i] = coef;
      }
      rows.push_back(row);
    }
  // rank by Gaussian elimination
  int rank = 0;
  for (int col = 0; col < I && rank < (int)rows.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (std::abs(rows[r][col]) > 1e-9) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank || std::abs(rows[r][col]) < 1e-9) continue;
      double f = rows[r][col] / rows[rank][col];
      for (int c2 = 0; c2 < I; ++c2) rows[r][c2] -= f * rows[rank][c2];
    }
    ++rank;
  }
  return I - rank;
}

}  // namespace rrp
