#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rrp/heap_forest.hpp"
#include "rrp/linear_comb.hpp"

namespace rrp {

/*
 * Tree Feynman half-diagrams. The sigma-lines reproduce the forest edges;
 * every vertex carries exactly one phi-leg, either uncontracted (cut at
 * the mirror) or contracted with its partner. Roots carry an external
 * sigma-leg; the external sigma-legs at leaves have zero momentum and are
 * not represented.
 *
 * Momenta live in "zeta coordinates": one symbol per vertex, the momentum
 * of the sigma-line from v toward its parent (for roots, of the external
 * root leg). Then xi_v = zeta_v - sum_{children c} zeta_c, and contracted
 * pairs impose xi_a + xi_b = 0.
 */

// Momentum as rational combination of zeta symbols (index = vertex id).
using MomentumForm = std::map<int, Rational>;

MomentumForm operator+(const MomentumForm& a, const MomentumForm& b);
MomentumForm operator-(const MomentumForm& a, const MomentumForm& b);
std::string form_str(const MomentumForm& f);

struct LineId {
  enum Kind { SigmaEdge = 0, RootLeg = 1, PhiLeg = 2 };
  Kind kind;
  int v;  // SigmaEdge: the child vertex; RootLeg: the root; PhiLeg: vertex (pairs: min endpoint)

  friend bool operator<(const LineId& a, const LineId& b) {
    return std::tie(a.kind, a.v) < std::tie(b.kind, b.v);
  }
  friend bool operator==(const LineId& a, const LineId& b) {
    return a.kind == b.kind && a.v == b.v;
  }
};

std::string line_str(const LineId& l);

struct HalfDiagram {
  HeapForest forest;
  std::vector<std::pair<int, int>> contractions;

  // derived
  std::vector<std::vector<int>> children;
  std::vector<int> roots;
  std::vector<int> pair_of;    // contraction id or -1
  std::vector<int> pair_sign;  // +1 at the first endpoint, -1 at the second

  int n() const { return forest.size(); }
  bool contracted(int v) const { return pair_of[v] >= 0; }
  int phi_line_vertex(int v) const;  // canonical vertex of v's phi line
  std::vector<LineId> all_lines() const;

  MomentumForm zeta_form(int v) const;  // unit form
  MomentumForm xi_form(int v) const;    // zeta_v - sum of children zetas
  // momentum conservation constraints xi_a + xi_b = 0, one per contraction
  std::vector<MomentumForm> constraints() const;
  // sum of external momenta minus sum of uncontracted xi (vanishes modulo
  // constraints: the hidden delta function)
  MomentumForm external_balance() const;
};

HalfDiagram build_half_diagram(const HeapForest& forest,
                               const std::vector<std::pair<int, int>>& contractions);

// The mirror double G = (G^{1/2})^2 with identified external structure.
struct SymmetricDiagram {
  HalfDiagram half;
  bool bilateral() const;  // at least one uncontracted phi-leg (a bridge)
  bool totally_contracted() const;
  // A totally contracted connected diagram has zeta_ext = 0 and vanishes
  // by the momentum-negation symmetry when it has an odd number of
  // internal sigma-lines per side.
  bool zero_by_symmetry() const;
};

// Connected subgraph of the half-diagram given by a set of lines (the
// mirror half is implied; bridges in the set connect the two halves).
struct Subgraph {
  std::set<LineId> lines;

  std::set<int> vertices(const HalfDiagram& d) const;
  std::vector<LineId> external_legs(const HalfDiagram& d) const;
  bool has_external_phi(const HalfDiagram& d) const;
  bool is_bilateral(const HalfDiagram& d) const;  // contains a bridge
  bool contains(const Subgraph& o) const;
  bool disjoint(const Subgraph& o) const;
};

bool operator<(const Subgraph& a, const Subgraph& b);
bool operator==(const Subgraph& a, const Subgraph& b);

// Diverging = no external phi-legs.
bool is_divergent(const HalfDiagram& d, const Subgraph& g);

// All connected line subsets (on the half side; connectivity through
// shared vertices and through contracted pairs).
std::vector<Subgraph> connected_subgraphs(const HalfDiagram& d);

// Number of independent momenta of the symmetric diagram,
// I(G) - |V(G)| + 1 for connected G; computed by rank elimination over the
// constraint system so the counting identity can be tested against it.
int independent_momentum_count(const SymmetricDiagram& g);

}  // namespace rrp
