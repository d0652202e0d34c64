#pragma once

#include <string>

#include "rrp/scales.hpp"
#include "rrp/trees.hpp"

namespace rrp {

std::string tree_to_dot(const DecoratedTree& t);

// Half-diagram with the mirror implied: sigma lines solid, phi lines
// doubled (bold); uncontracted phi-legs dangle toward the mirror.
std::string diagram_to_dot(const HalfDiagram& d);

std::string gn_tree_to_dot(const std::vector<GNNode>& nodes);

}  // namespace rrp
