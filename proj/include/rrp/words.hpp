#pragma once

#include <utility>
#include <vector>

#include "rrp/linear_comb.hpp"
#include "rrp/trees.hpp"

namespace rrp {

// Shuffle Hopf algebra of words over {1..d}. A word (i1..in) is identified
// with the trunk tree decorated i1..in from the root to the top.
using Word = std::vector<int>;
using TensorShSh = LinearComb<std::pair<Word, Word>>;

LinearComb<Word> shuffle_product(const Word& u, const Word& v);
LinearComb<Word> shuffle_product(const LinearComb<Word>& u, const LinearComb<Word>& v);

// Deconcatenation coproduct.
TensorShSh word_coproduct(const Word& w);

// Antipode of (shuffle, deconcatenation): w -> (-1)^|w| reverse(w).
// This is the unique map satisfying the antipode axiom; see tests.
LinearComb<Word> word_antipode(const Word& w);
LinearComb<Word> word_antipode(const LinearComb<Word>& x);

LinearComb<Word> word_antipode_check_left(const Word& w);   // m(S x id)Delta
LinearComb<Word> word_antipode_check_right(const Word& w);  // m(id x S)Delta

// Projection morphism theta: H -> Sh. Sum over all words compatible with
// the ancestry order of the tree (linear extensions, root to top), extended
// to forests via the shuffle product.
LinearComb<Word> theta(const DecoratedTree& t);
LinearComb<Word> theta(const Forest& f);
LinearComb<Word> theta(const LinearComb<Forest>& x);

// The trunk tree carrying a word, root decorated by the first letter.
DecoratedTree trunk_tree(const Word& w);

std::vector<Word> enumerate_words(int n, int d);

}  // namespace rrp
