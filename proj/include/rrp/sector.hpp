#pragma once

#include <map>
#include <vector>

#include "rrp/path_model.hpp"
#include "rrp/words.hpp"

namespace rrp {

// One atom of a spectral measure on R^n: a frequency (global index) per
// slot and the product of the slot weights.
struct SpectralAtom {
  std::vector<int> freq;
  cplx weight;
};

// Atoms in the sector |xi_1| <= ... <= |xi_n| obtained from a tensor
// measure by the reindexing eta_j = xi_{sigma(j)}; slot j carries the
// letter word[sigma[j]] of the original word.
struct SectorMeasure {
  std::vector<int> sigma;  // 0-based permutation
  std::vector<SpectralAtom> atoms;
};

// Full tensor measure of dGamma(word[0]) x ... x dGamma(word[n-1]).
std::vector<SpectralAtom> tensor_atoms(const PathModel& path, const Word& word);

/*
 * Measure splitting: every atom is assigned to the unique permutation
 * sorting its |xi| ascending. Exact coincidences between distinct modes
 * violate genericity and raise TieError; the diagonal atoms that repeated
 * letters necessarily produce (the same mode in two slots) are assigned
 * stably by slot index, which keeps the splitting an exact partition.
 */
std::map<std::vector<int>, SectorMeasure> split_measure(const PathModel& path,
                                                        const Word& word);

// Pushes the sector atoms back through sigma^{ -1 } and reassembles the
// tensor measure; used by the partition tests.
std::vector<SpectralAtom> unsplit(const std::map<std::vector<int>, SectorMeasure>& sectors);

}  // namespace rrp
