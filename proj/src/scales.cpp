#include "rrp/scales.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rrp/errors.hpp"

namespace rrp {

int ScaleAttribution::scale(const LineId& l) const {
  auto it = j.find(l);
  if (it == j.end()) throw std::invalid_argument("attribution misses line " + line_str(l));
  return it->second;
}

namespace {

// connected components (on the half side) of an arbitrary line set
std::vector<Subgraph> line_components(const HalfDiagram& d, const std::vector<LineId>& lines) {
  auto verts_of = [&](const LineId& l) {
    std::vector<int> v{l.v};
    if (l.kind == LineId::SigmaEdge) v.push_back(d.forest.parent[l.v]);
    if (l.kind == LineId::PhiLeg && d.contracted(l.v)) {
      const auto& p = d.contractions[d.pair_of[l.v]];
      v = {p.first, p.second};
    }
    return v;
  };
  const int m = (int)lines.size();
  std::vector<int> comp(m, -1);
  int nc = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = nc;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < m; ++b) {
        if (comp[b] >= 0) continue;
        bool shared = false;
        for (int x : verts_of(lines[a]))
          for (int y : verts_of(lines[b]))
            if (x == y) shared = true;
        if (shared) {
          comp[b] = nc;
          stack.push_back(b);
        }
      }
    }
    ++nc;
  }
  std::vector<Subgraph> out(nc);
  for (int i = 0; i < m; ++i) out[comp[i]].lines.insert(lines[i]);
  return out;
}

}  // namespace

std::vector<GNNode> gn_tree(const SymmetricDiagram& g, const ScaleAttribution& mu) {
  const HalfDiagram& d = g.half;
  auto all = d.all_lines();
  std::set<int> scales;
  for (const auto& l : all) scales.insert(mu.scale(l));

  std::map<Subgraph, GNNode> nodes;
  for (int j : scales) {
    std::vector<LineId> lines;
    for (const auto& l : all)
      if (mu.scale(l) >= j) lines.push_back(l);
    for (auto& c : line_components(d, lines)) {
      auto it = nodes.find(c);
      if (it == nodes.end()) {
        GNNode n;
        n.g = c;
        n.j_high = n.j_low = j;
        nodes.emplace(c, n);
      } else {
        it->second.j_low = std::min(it->second.j_low, j);
        it->second.j_high = std::max(it->second.j_high, j);
      }
    }
  }

  std::vector<GNNode> out;
  for (auto& [g_, n] : nodes) out.push_back(n);
  // parent: smallest strictly containing node
  for (std::size_t i = 0; i < out.size(); ++i) {
    int best = -1;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (i == k) continue;
      if (out[k].g.contains(out[i].g) && !(out[k].g == out[i].g)) {
        if (best < 0 || out[best].g.contains(out[k].g)) best = (int)k;
      }
    }
    out[i].parent = best;
  }
  return out;
}

namespace {

int min_internal_scale(const Subgraph& g, const ScaleAttribution& mu) {
  int m = INT32_MAX;
  for (const auto& l : g.lines) m = std::min(m, mu.scale(l));
  return m;
}

int max_external_scale(const HalfDiagram& d, const Subgraph& g, const Subgraph& parent,
                       const ScaleAttribution& mu) {
  int m = INT32_MIN;
  for (const auto& l : g.external_legs(d))
    if (parent.lines.count(l)) m = std::max(m, mu.scale(l));
  return m;
}

Subgraph whole_graph(const HalfDiagram& d) {
  Subgraph g;
  for (const auto& l : d.all_lines()) g.lines.insert(l);
  return g;
}

// dangerous condition for g within forest f (ancestor/children from f+G)
bool is_dangerous(const HalfDiagram& d, const Subgraph& g,
                  const std::vector<Subgraph>& forest, const ScaleAttribution& mu) {
  Subgraph parent = whole_graph(d);
  for (const auto& h : forest) {
    if (h == g) continue;
    if (h.contains(g) && parent.contains(h)) parent = h;
  }
  // lines of g minus the union of its forest children
  std::set<LineId> own = g.lines;
  for (const auto& h : forest) {
    if (h == g || !g.contains(h)) continue;
    for (const auto& l : h.lines) own.erase(l);
  }
  if (own.empty()) return false;
  int mn = INT32_MAX;
  for (const auto& l : own) mn = std::min(mn, mu.scale(l));
  int mx = max_external_scale(d, g, parent, mu);
  return mn > mx;  // max over empty external set is -inf: dangerous
}

}  // namespace

std::vector<Subgraph> nd_projection(const HalfDiagram& d,
                                    const std::vector<Subgraph>& forest,
                                    const ScaleAttribution& mu) {
  std::vector<Subgraph> nd;
  for (const auto& g : forest)
    if (!is_dangerous(d, g, forest, mu)) nd.push_back(g);
  return nd;
}

ForestClassification classify_forest(const HalfDiagram& d,
                                     const std::vector<Subgraph>& forest,
                                     const ScaleAttribution& mu) {
  ForestClassification out;
  for (const auto& g : forest) {
    if (is_dangerous(d, g, forest, mu))
      out.dangerous.push_back(g);
    else
      out.harmless.push_back(g);
  }
  out.safe = out.dangerous.empty();

  // Ext^mu(F): subgraphs compatible with F that become dangerous in F+{g}
  Subgraph total = whole_graph(d);
  for (const auto& g : connected_subgraphs(d)) {
    bool in_forest = false, compatible = true;
    for (const auto& h : forest) {
      if (h == g) in_forest = true;
      if (!(h.contains(g) || g.contains(h) || h.disjoint(g))) compatible = false;
    }
    if (in_forest || !compatible) continue;
    std::vector<Subgraph> extended = forest;
    extended.push_back(g);
    if (is_dangerous(d, g, extended, mu)) out.extension.push_back(g);
  }
  return out;
}

std::vector<OmegaStarEntry> omega_star_sequence(const SymmetricDiagram& sym,
                                                const ScaleAttribution& mu) {
  const HalfDiagram& d = sym.half;
  auto all = d.all_lines();
  std::set<int> scale_set;
  for (const auto& l : all) scale_set.insert(mu.scale(l));
  std::vector<int> scales(scale_set.begin(), scale_set.end());

  Subgraph total = whole_graph(d);
  auto nodes = gn_tree(sym, mu);

  // springs: one per zeroed external sigma-leg of a subtracted local
  // subgraph, active on (mu(z), mu(phi at entry vertex of z)]
  struct Spring { int lo, hi; };
  std::vector<Spring> springs;
  for (const auto& node : nodes) {
    if (node.g == total) continue;        // the total graph is not renormalized
    if (!is_divergent(d, node.g)) continue;
    auto verts = node.g.vertices(d);
    std::vector<LineId> ext_sigma, root_legs;
    for (const auto& l : node.g.external_legs(d)) {
      if (l.kind == LineId::SigmaEdge) ext_sigma.push_back(l);
      if (l.kind == LineId::RootLeg) root_legs.push_back(l);
    }
    std::vector<LineId> zeroed = ext_sigma.empty() ? root_legs : ext_sigma;
    for (const auto& z : zeroed) {
      int entry;
      if (z.kind == LineId::RootLeg) {
        entry = z.v;
      } else {
        int child = z.v, par = d.forest.parent[z.v];
        entry = verts.count(par) ? par : child;
      }
      LineId phi{LineId::PhiLeg, d.phi_line_vertex(entry)};
      int hi = node.g.lines.count(phi) ? mu.scale(phi) : min_internal_scale(node.g, mu);
      springs.push_back({mu.scale(z), hi});
    }
  }

  std::vector<OmegaStarEntry> out;
  for (auto it = scales.rbegin(); it != scales.rend(); ++it) {
    int j = *it;
    std::vector<LineId> lines;
    for (const auto& l : all)
      if (mu.scale(l) >= j) lines.push_back(l);
    DivergenceDegree val{Rational(0), Rational(0)};
    for (const auto& c : line_components(d, lines)) {
      DivergenceDegree om = omega(d, c);
      if (!c.is_bilateral(d)) om = om + om;  // unilateral mirror pair
      val = val + om;
    }
    for (const auto& s : springs)
      if (s.lo < j && j <= s.hi) val = val + DivergenceDegree{Rational(-2), Rational(0)};
    out.push_back({j, val});
  }
  return out;
}

double BoundPrediction::evaluate(double M, int j_ref, const std::vector<double>& zeta_ext,
                                 double alpha) const {
  double lo = std::pow(M, j_ref), hi = std::pow(M, j_ref);
  for (double z : zeta_ext) {
    lo = std::min(lo, std::abs(z));
    hi = std::max(hi, std::abs(z));
  }
  double mref = std::pow(M, j_ref);
  double num = std::min(lo, mref), den = std::max(hi, mref);
  return std::pow(M, jref_exponent.at(alpha) * j_ref) * std::pow(num / den, alpha_minus);
}

BoundPrediction predict_bound(const SymmetricDiagram& g, const ScaleAttribution& mu,
                              int n, int n_prime, double alpha, double alpha_minus) {
  if (alpha <= 0 || alpha >= 1 || std::abs(1.0 / alpha - std::round(1.0 / alpha)) < 1e-9)
    throw AlphaRangeError("alpha must be in (0,1) with 1/alpha not an integer");
  if (2 * n >= 2.0 / alpha) throw AlphaRangeError("need 2n < 2/alpha");
  if (n + n_prime >= 1.0 / alpha) throw AlphaRangeError("need n + n' < 1/alpha");
  if (!(alpha_minus < alpha)) throw AlphaRangeError("need alpha- < alpha");

  BoundPrediction out;
  out.jref_exponent = {Rational(1), Rational(-2 * (n + n_prime))};
  out.alpha_minus = alpha_minus;

  // grafting |xi_1|^{-2n' alpha}: subtract 2n' alpha at the scales at or
  // below the lowest phi-line
  int j_xi1 = INT32_MAX;
  for (int v = 0; v < g.half.n(); ++v)
    j_xi1 = std::min(j_xi1, mu.scale({LineId::PhiLeg, g.half.phi_line_vertex(v)}));
  out.omega_star_grafted = omega_star_sequence(g, mu);
  for (auto& e : out.omega_star_grafted)
    if (e.j <= j_xi1) e.value = e.value + DivergenceDegree{Rational(0), Rational(-2 * n_prime)};
  return out;
}

}  // namespace rrp
