#pragma once

// Shared worked-example fixtures: the 4-vertex tree of the scaling
// examples and its two scale attributions, plus the contracted 6-vertex
// diagram. Vertex ids are 0-based; the published labels 1,2,3,4 / 1',2'
// map to 0,1,2,3 / 4,5.

#include "rrp/diagram.hpp"
#include "rrp/scales.hpp"

namespace fixtures {

// root 0 with children 1 and 3; 2 sits above 1
inline rrp::HeapForest example_tree() { return rrp::HeapForest{{-1, 0, 1, 0}}; }

inline rrp::HalfDiagram example_half() {
  return rrp::build_half_diagram(example_tree(), {});
}

// T'.T with contractions (1,1') and (2,4): vertices 4 = root', 5 = top'
inline rrp::HalfDiagram contracted_half() {
  rrp::HeapForest f{{-1, 0, 1, 0, -1, 4}};
  return rrp::build_half_diagram(f, {{0, 4}, {1, 3}});
}

// scale order zeta3 > zeta4 > zeta2 > zeta1 (published example 1)
inline rrp::ScaleAttribution attribution_ex1() {
  using rrp::LineId;
  rrp::ScaleAttribution mu;
  mu.j[{LineId::RootLeg, 0}] = 0;   // zeta1
  mu.j[{LineId::SigmaEdge, 1}] = 1; // zeta2
  mu.j[{LineId::SigmaEdge, 2}] = 3; // zeta3
  mu.j[{LineId::SigmaEdge, 3}] = 2; // zeta4
  mu.j[{LineId::PhiLeg, 0}] = 2;    // xi1 ~ zeta4
  mu.j[{LineId::PhiLeg, 1}] = 3;    // xi2 ~ zeta3
  mu.j[{LineId::PhiLeg, 2}] = 3;    // xi3 = zeta3
  mu.j[{LineId::PhiLeg, 3}] = 2;    // xi4 = zeta4
  return mu;
}

// scale order zeta1 = zeta4 > zeta3 > xi1 > zeta2 (published example 2)
inline rrp::ScaleAttribution attribution_ex2() {
  using rrp::LineId;
  rrp::ScaleAttribution mu;
  mu.j[{LineId::RootLeg, 0}] = 3;   // zeta1
  mu.j[{LineId::SigmaEdge, 1}] = 0; // zeta2
  mu.j[{LineId::SigmaEdge, 2}] = 2; // zeta3
  mu.j[{LineId::SigmaEdge, 3}] = 3; // zeta4 ~ zeta1
  mu.j[{LineId::PhiLeg, 0}] = 1;    // xi1
  mu.j[{LineId::PhiLeg, 1}] = 2;    // xi2 ~ zeta3
  mu.j[{LineId::PhiLeg, 2}] = 2;    // xi3 = zeta3
  mu.j[{LineId::PhiLeg, 3}] = 3;    // xi4 = zeta4
  return mu;
}

}  // namespace fixtures
