#pragma once

#include <string>
#include <vector>

namespace rrp {

// Decorated rooted tree in canonical form: children are kept sorted by
// their own canonical order, so isomorphic trees compare equal and the
// serialized key depends on the topology and decorations only.
struct DecoratedTree {
  int dec = 1;                          // decoration in {1..d}
  std::vector<DecoratedTree> children;  // sorted, each canonical

  static DecoratedTree leaf(int d) { return DecoratedTree{d, {}}; }
  static DecoratedTree node(int d, std::vector<DecoratedTree> ch);

  int size() const;
  std::string canonical_key() const;
};

bool operator<(const DecoratedTree& a, const DecoratedTree& b);
bool operator==(const DecoratedTree& a, const DecoratedTree& b);

// Forest = commutative product of trees, kept sorted.
using Forest = std::vector<DecoratedTree>;

Forest make_forest(std::vector<DecoratedTree> trees);
Forest forest_product(const Forest& a, const Forest& b);
std::string forest_key(const Forest& f);
int forest_size(const Forest& f);

// Indexed working view of a tree (or forest): vertex ids 0..n-1, parent[v]
// is the parent id or -1 for roots, in preorder (parent before child).
struct TreeView {
  std::vector<int> parent;
  std::vector<int> dec;

  int size() const { return (int)parent.size(); }
  bool is_ancestor(int anc, int v) const;  // strict: anc below v on the path to the root
};

TreeView to_view(const DecoratedTree& t);
TreeView to_view(const Forest& f);

// Builds the canonical tree from an arbitrary parent/decoration labeling.
// Throws std::invalid_argument unless the parent map is acyclic with exactly
// one root.
DecoratedTree tree_from_parent_map(const std::vector<int>& parent,
                                   const std::vector<int>& dec);
Forest forest_from_parent_map(const std::vector<int>& parent,
                              const std::vector<int>& dec);

// All canonical decorated trees with exactly n vertices, decorations 1..d.
std::vector<DecoratedTree> enumerate_trees(int n, int d);

}  // namespace rrp
