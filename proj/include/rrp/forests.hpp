#pragma once

#include "rrp/amplitude.hpp"

namespace rrp {

/*
 * BPHZ forest machinery.
 *
 * Divergent subgraph candidates are connected vertex sets W with every
 * phi-leg of W included (so no contraction may cross the boundary). The
 * subtraction tau_g works in the ambient zeta routing: the momenta of the
 * boundary sigma-legs of W are set to zero inside the args of g's own
 * lines. Root legs stay at their flowing value; when W has no boundary
 * sigma-legs at all (it absorbs whole trees), the root-leg momenta are the
 * only true external legs left and those are zeroed instead. Members whose
 * subtraction kills one of their own |xi| factors identically contribute
 * nothing to any forest and are dropped up front.
 */

std::vector<BphzMember> divergent_members(const HalfDiagram& d);

bool members_compatible(const BphzMember& a, const BphzMember& b);

// All forests (subsets of pairwise nested-or-disjoint members), including
// the empty one.
std::vector<std::vector<int>> enumerate_forests(const std::vector<BphzMember>& members);

// Forests expressed through line-set subgraphs, empty forest included.
std::vector<std::vector<Subgraph>> enumerate_divergent_forests(const HalfDiagram& d);

// Zimmermann forest sum R A = sum_F prod_{g in F} (-tau_g) A with
// substitution records kept per term.
AmplitudeExpression bphz_renormalize(const HalfDiagram& h);

}  // namespace rrp
