#include "rrp/amplitude.hpp"

namespace rrp {

std::string DivergenceDegree::str() const {
  std::string s = a.str();
  if (!b.is_zero()) {
    s += (b < Rational(0)) ? " - " : " + ";
    Rational v = b < Rational(0) ? -b : b;
    if (!(v == Rational(1))) s += v.str() + "*";
    s += "alpha";
  }
  return s;
}

DivergenceDegree omega_counts(int n_vertices, int n_ext_phi) {
  // 1 - alpha |V| - (1 - alpha) N_phi = (1 - N_phi) + (N_phi - |V|) alpha
  return {Rational(1 - n_ext_phi), Rational(n_ext_phi - n_vertices)};
}

DivergenceDegree omega(const HalfDiagram& d, const Subgraph& g) {
  int verts = (int)g.vertices(d).size();
  int ext_phi = 0;
  for (const auto& l : g.external_legs(d))
    if (l.kind == LineId::PhiLeg) ++ext_phi;
  if (g.is_bilateral(d)) return omega_counts(2 * verts, 2 * ext_phi);
  return omega_counts(verts, ext_phi);
}

DivergenceDegree omega(const SymmetricDiagram& g) {
  return omega_counts(2 * g.half.n(), 0);
}

DivergenceDegree omega_half(const HalfDiagram& d) {
  // uncontracted legs are attached on the mirror, not true external legs
  return omega_counts(d.n(), 0);
}

DivergenceDegree omega_star(const DivergenceDegree& om, Side side, bool divergent,
                            bool is_total) {
  if (!divergent || is_total) return om;
  return {om.a - Rational(side == Side::bilateral ? 2 : 1), om.b};
}

DivergenceDegree omega_star(const HalfDiagram& d, const Subgraph& g, bool is_total) {
  return omega_star(omega(d, g), g.is_bilateral(d) ? Side::bilateral : Side::unilateral,
                    is_divergent(d, g), is_total);
}

std::vector<Factor> feynman_factors(const HalfDiagram& d) {
  std::vector<Factor> out;
  for (int v = 0; v < d.n(); ++v) {
    if (!d.contracted(v))
      out.push_back({Factor::AbsHalfMinusAlpha, {LineId::PhiLeg, v}, d.xi_form(v)});
    else if (d.phi_line_vertex(v) == v)
      out.push_back({Factor::AbsOneMinusTwoAlpha, {LineId::PhiLeg, v}, d.xi_form(v)});
    if (d.forest.parent[v] >= 0)
      out.push_back({Factor::InvZeta, {LineId::SigmaEdge, v}, d.zeta_form(v)});
  }
  return out;
}

AmplitudeExpression amplitude(const HalfDiagram& h) {
  AmplitudeExpression e;
  e.diagram = h;
  ForestTerm t;
  t.sign = 1;
  t.factors = feynman_factors(h);
  e.terms.push_back(std::move(t));
  return e;
}

AmplitudeExpression amplitude_sq(const SymmetricDiagram& g) {
  AmplitudeExpression e = amplitude(g.half);
  e.squared = true;
  return e;
}

std::string AmplitudeExpression::str() const {
  std::string s;
  for (const auto& t : terms) {
    s += (t.sign > 0) ? "+ " : "- ";
    for (const auto& f : t.factors) {
      switch (f.kind) {
        case Factor::AbsHalfMinusAlpha: s += "|" + form_str(f.arg) + "|^(1/2-a) "; break;
        case Factor::AbsOneMinusTwoAlpha: s += "|" + form_str(f.arg) + "|^(1-2a) "; break;
        case Factor::InvZeta: s += "1/(" + form_str(f.arg) + ") "; break;
      }
    }
    s += "\n";
  }
  return s;
}

}  // namespace rrp
