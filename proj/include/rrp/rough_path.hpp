#pragma once

#include "rrp/tree_data.hpp"

namespace rrp {

struct RoughPathValue {
  Word word;
  double s = 0.0, t = 0.0;
  cplx value;
  cplx value_tree_route;  // the tree-convolution evaluation of the same J
  double route_residual() const { return std::abs(value - value_tree_route); }
};

// One admissible-cut term of the tree convolution phi^t * (phi^s o Sbar):
// scalar coefficient, the Roo piece (evaluated at t) and one antipode
// summand of the Lea piece (evaluated at s).
struct ConvTerm {
  double coef;
  LabeledForest roo;
  LabeledForest lea_antipode;
};

std::vector<ConvTerm> tree_convolution_terms(const LabeledForest& tree);

// chi^t, the one-time character of Sh built by Fourier normal ordering:
// the sum over sectors of phi on the permutation graphs.
cplx chi(const TreeData& data, const Word& word, double t);

// J^{ts} by the shuffle-convolution definition chi^t * (chi^s o S).
cplx rough_path_jchi(const TreeData& data, const Word& word, double s, double t);

// J^{ts} by the tree-convolution definition: per sector, the convolution
// phi^t * (phi^s o Sbar) evaluated on the permutation graph, with the
// antipode expanded into labeled forests by multiple cuts.
cplx rough_path_jphi(const TreeData& data, const Word& word, double s, double t);

// Both routes; they must agree to ~1e-12.
RoughPathValue rough_path(const TreeData& data, const Word& word, double s, double t);

// Chen property residual through intermediate time u:
// |J^{ts}(w) - sum_k J^{tu}(w_{<=k}) J^{us}(w_{>k})| maximized over words.
double verify_chen(const TreeData& data, const std::vector<Word>& words, double s,
                   double u, double t);

// Shuffle property residual |J(u)J(v) - J(u shuffle v)| maximized over the
// given pairs.
double verify_shuffle(const TreeData& data,
                      const std::vector<std::pair<Word, Word>>& pairs, double s,
                      double t);

}  // namespace rrp
