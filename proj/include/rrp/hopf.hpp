#pragma once

#include <utility>
#include <vector>

#include "rrp/linear_comb.hpp"
#include "rrp/trees.hpp"

namespace rrp {

// Hopf algebra of decorated rooted trees: coproduct by admissible cuts,
// inductive antipode, both extended multiplicatively to forests.

using TensorHH = LinearComb<std::pair<Forest, Forest>>;

// All admissible cuts of the view: vertex subsets no two of which are equal
// or in ancestor relation. Includes the empty cut and the root cuts.
std::vector<std::vector<int>> admissible_cuts(const TreeView& view);

// Splits a view along a cut: first = Roo (vertices not weakly above any cut
// vertex), second = Lea (the rest; the cut vertices are its roots).
std::pair<Forest, Forest> cut_split(const TreeView& view, const std::vector<int>& cut);

TensorHH coproduct(const DecoratedTree& t);
TensorHH coproduct(const Forest& f);
TensorHH coproduct(const LinearComb<Forest>& x);

LinearComb<Forest> antipode(const DecoratedTree& t);
LinearComb<Forest> antipode(const Forest& f);
LinearComb<Forest> antipode(const LinearComb<Forest>& x);

// Counit: coefficient of the empty forest.
Rational counit(const LinearComb<Forest>& x);

// m((S x id) Delta) and m((id x S) Delta); both must equal eta(eps(.)).
LinearComb<Forest> antipode_check_left(const Forest& f);
LinearComb<Forest> antipode_check_right(const Forest& f);

}  // namespace rrp
