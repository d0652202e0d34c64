#pragma once

#include "rrp/heap_forest.hpp"
#include "rrp/sector.hpp"

namespace rrp {

/*
 * Skeleton integrals over forest domains with the one-argument convention
 * int^x e^{iyw} dy = e^{ixw}/(iw): per atom,
 *   SkI^t = prod_v 1/(i D_v) * weight * e^{it sum_v xi_v},
 * D_v = sum of xi over the subtree of v. Throws DegenerateDenominator if
 * some D_v vanishes.
 */
cplx skeleton_atom(const PathModel& path, const LabeledForest& f,
                   const std::vector<int>& freq_by_vertex, double t);

// Sums skeleton_atom * weight over the atoms of a sector measure; vertex
// label v of the forest reads slot v of each atom.
cplx skeleton_integral(const PathModel& path, const HeapForest& f,
                       const SectorMeasure& measure, double t);

// SkI^t on a word = skeleton integral of the trunk over the full tensor
// measure. A character of the shuffle algebra; see tests.
cplx skeleton_word(const PathModel& path, const Word& w, double t);

}  // namespace rrp
