#pragma once

#include <map>

#include "rrp/amplitude.hpp"

namespace rrp {

// M-adic scale per line, |z_l| in [M^j, M^{j+1}); contracted pairs are one
// line and the mirror copies share the scales by construction.
struct ScaleAttribution {
  std::map<LineId, int> j;
  double M = 2.0;

  int scale(const LineId& l) const;
};

struct GNNode {
  Subgraph g;
  int j_high = 0;  // appears as a connected component for j in (j_low, j_high]
  int j_low = 0;
  int parent = -1;  // index of the smallest strictly containing node
};

// Gallavotti-Nicolo tree: connected components of the scale >= j line sets
// for each occurring j, deduplicated, linked by inclusion.
std::vector<GNNode> gn_tree(const SymmetricDiagram& g, const ScaleAttribution& mu);

/*
 * Dangerous/safe classification of forests of subgraphs relative to an
 * attribution. g- is the ancestor of g in F u {G}, g^ the union of its
 * F-children;
 *   g dangerous in F  <=>  min scale of L(g \ g^) > max scale of
 *                          L_ext(g) cap L(g-).
 */
struct ForestClassification {
  std::vector<Subgraph> dangerous;
  std::vector<Subgraph> harmless;  // ND = F \ D
  std::vector<Subgraph> extension; // Ext^mu(F), maximal dangerous extension
  bool safe = false;               // ND(F) == F
};

ForestClassification classify_forest(const HalfDiagram& d,
                                     const std::vector<Subgraph>& forest,
                                     const ScaleAttribution& mu);

std::vector<Subgraph> nd_projection(const HalfDiagram& d,
                                    const std::vector<Subgraph>& forest,
                                    const ScaleAttribution& mu);

/*
 * Per-scale renormalized divergence degrees omega*(G^j): the sum of
 * omega over the scale-j components, minus 2 for every active spring.
 * Each subtracted local subgraph contributes one spring per zeroed
 * external sigma-leg z, active on the scales in
 * (mu(z), mu(phi-leg at the entry vertex of z)].
 */
struct OmegaStarEntry {
  int j;
  DivergenceDegree value;
};

std::vector<OmegaStarEntry> omega_star_sequence(const SymmetricDiagram& g,
                                                const ScaleAttribution& mu);

// Theorem-style bound data for a renormalized symmetric diagram.
struct BoundPrediction {
  DivergenceDegree jref_exponent;   // 1 - 2 (n + n') alpha
  double alpha_minus = 0.0;
  // bound value at concrete momenta: M^{exp * jref} * (min/max)^{alpha-}
  double evaluate(double M, int j_ref, const std::vector<double>& zeta_ext,
                  double alpha) const;
  std::vector<OmegaStarEntry> omega_star_grafted;  // omega* - 2 n' alpha below j(xi1)
};

BoundPrediction predict_bound(const SymmetricDiagram& g, const ScaleAttribution& mu,
                              int n, int n_prime, double alpha, double alpha_minus);

}  // namespace rrp
