#pragma once

#include "rrp/diagram.hpp"
#include "rrp/rational.hpp"

namespace rrp {

// Exponent affine in alpha: a + b*alpha, compared symbolically.
struct DivergenceDegree {
  Rational a, b;

  double at(double alpha) const { return a.to_double() + b.to_double() * alpha; }
  friend bool operator==(const DivergenceDegree& x, const DivergenceDegree& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend DivergenceDegree operator+(const DivergenceDegree& x, const DivergenceDegree& y) {
    return {x.a + y.a, x.b + y.b};
  }
  // x <= y for every alpha in (0, alpha_max)
  bool le_on(const DivergenceDegree& y, double alpha_max) const {
    double lo = at(1e-12) - y.at(1e-12);
    double hi = at(alpha_max) - y.at(alpha_max);
    return lo <= 1e-9 && hi <= 1e-9;
  }
  std::string str() const;
};

enum class Side { unilateral, bilateral };

// omega(G) = 1 - alpha |V(G)| - (1 - alpha) N_phi(G)
DivergenceDegree omega_counts(int n_vertices, int n_ext_phi);

// For a subgraph of the half-diagram with the mirror implied: bilateral
// subgraphs count both sides, unilateral ones are a single piece.
DivergenceDegree omega(const HalfDiagram& d, const Subgraph& g);
DivergenceDegree omega(const SymmetricDiagram& g);
DivergenceDegree omega_half(const HalfDiagram& d);

// omega* = omega minus 1 (unilateral) or 2 (bilateral) for renormalized
// divergent subgraphs; the total graph is never renormalized.
DivergenceDegree omega_star(const DivergenceDegree& om, Side side, bool divergent,
                            bool is_total);
DivergenceDegree omega_star(const HalfDiagram& d, const Subgraph& g, bool is_total);

// Symbolic amplitude per the Feynman rules: |xi|^{1/2-alpha} per
// uncontracted phi-leg, |xi|^{1-2alpha} per contracted pair, 1/zeta per
// internal sigma-line (roots are amputated).
struct Factor {
  enum Kind { AbsHalfMinusAlpha, AbsOneMinusTwoAlpha, InvZeta };
  Kind kind;
  LineId line;
  MomentumForm arg;
};

struct ForestTerm {
  int sign = 1;
  std::vector<int> members;  // indices into AmplitudeExpression::members
  std::vector<Factor> factors;
};

struct BphzMember {
  std::vector<int> verts;   // connected vertex set, sorted
  std::vector<int> zeroed;  // zeta symbols set to zero by tau_g
  Subgraph lines;           // induced lines (incl. root legs of W)
};

struct AmplitudeExpression {
  HalfDiagram diagram;
  bool squared = false;  // mirror-glued variance integrand
  std::vector<BphzMember> members;
  std::vector<ForestTerm> terms;  // empty-forest term first, sign +1

  std::string str() const;
};

std::vector<Factor> feynman_factors(const HalfDiagram& d);

AmplitudeExpression amplitude(const HalfDiagram& h);
AmplitudeExpression amplitude_sq(const SymmetricDiagram& g);

}  // namespace rrp
