#pragma once

#include <vector>

#include "rrp/linear_comb.hpp"

namespace rrp {

// Heap-ordered forest: vertices 0..n-1, parent[v] < v or -1 for roots, so
// labels strictly increase away from the roots. Labels are significant
// (they index measure slots), so equality is equality of the parent vector.
struct HeapForest {
  std::vector<int> parent;

  int size() const { return (int)parent.size(); }
  bool heap_ordered() const {
    for (int v = 0; v < size(); ++v)
      if (parent[v] >= v) return false;
    return true;
  }
};

bool operator<(const HeapForest& a, const HeapForest& b);
bool operator==(const HeapForest& a, const HeapForest& b);

// Trunk chain 0 -> 1 -> ... -> n-1 (root 0).
HeapForest trunk_chain(int n);

// Product of the heap-ordered algebra: labels of b shifted by |a|.
HeapForest wedge(const HeapForest& a, const HeapForest& b);

// Sub-forest of some ambient vertex set, keeping original labels. verts is
// sorted; par[i] indexes into verts, or -1 for roots of the piece.
struct LabeledForest {
  std::vector<int> verts;
  std::vector<int> par;

  int size() const { return (int)verts.size(); }
  bool is_ancestor(int i, int j) const;  // indices into verts, strict
};

bool operator<(const LabeledForest& a, const LabeledForest& b);
bool operator==(const LabeledForest& a, const LabeledForest& b);

LabeledForest as_labeled(const HeapForest& f);
LabeledForest labeled_union(const LabeledForest& a, const LabeledForest& b);
std::vector<LabeledForest> components(const LabeledForest& f);

// Admissible cuts and Roo/Lea split on labeled forests.
std::vector<std::vector<int>> admissible_cuts(const LabeledForest& f);
std::pair<LabeledForest, LabeledForest> cut_split(const LabeledForest& f,
                                                  const std::vector<int>& cut);

// Inductive antipode on labeled forests, multiplicative over components.
LinearComb<LabeledForest> antipode(const LabeledForest& f);

/*
 * Permutation graph T^sigma.
 *
 * The reordered trunk integral for sigma has domain
 *   t > x_{sigma^-1(1)} > x_{sigma^-1(2)} > ... > x_{sigma^-1(n)} > s.
 * Starting from that chain (as an upper-bound forest), every edge whose
 * parent label exceeds the child label is removed by the two-term split
 *   1_{x_c < x_p} = 1_{x_c < x_up(p)} - 1_{x_p < x_c < x_up(p)},
 * i.e. either the child is re-attached above p, or child and parent swap
 * levels. Picking the violating edge with the smallest child label makes
 * the number of misordered ancestor pairs strictly decrease in both
 * branches, so the rewrite terminates in a signed sum of heap-ordered
 * forests. Validated against nested-quadrature oracles in the tests.
 */
LinearComb<HeapForest> permutation_graph(int n, const std::vector<int>& sigma);

// All heap-ordered forests on n vertices (there are n! of them).
std::vector<HeapForest> enumerate_heap_forests(int n);

}  // namespace rrp
