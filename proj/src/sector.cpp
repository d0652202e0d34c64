#include "rrp/sector.hpp"

#include <algorithm>
#include <cmath>

#include "rrp/errors.hpp"

namespace rrp {

std::vector<SpectralAtom> tensor_atoms(const PathModel& path, const Word& word) {
  std::vector<SpectralAtom> atoms{{std::vector<int>{}, cplx(1.0, 0.0)}};
  for (int letter : word) {
    std::vector<SpectralAtom> next;
    next.reserve(atoms.size() * path.freq_indices(letter).size());
    for (const auto& a : atoms)
      for (int idx : path.freq_indices(letter)) {
        SpectralAtom b = a;
        b.freq.push_back(idx);
        b.weight *= path.atom_weight(idx);
        next.push_back(std::move(b));
      }
    atoms = std::move(next);
  }
  return atoms;
}

std::map<std::vector<int>, SectorMeasure> split_measure(const PathModel& path,
                                                        const Word& word) {
  const int n = (int)word.size();
  std::map<std::vector<int>, SectorMeasure> out;
  for (const auto& atom : tensor_atoms(path, word)) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::abs(path.freq_value(atom.freq[a])) <
             std::abs(path.freq_value(atom.freq[b]));
    });
    // tie groups: runs of equal |xi|. Ties between physically distinct
    // modes violate genericity; the diagonal atoms produced by a repeated
    // mode are split evenly over all consistent sectors (the atomic
    // counterpart of the measure-zero tie set), which is exactly what the
    // character property of chi requires.
    std::vector<std::pair<int, int>> groups;  // [begin, end)
    for (int i = 0; i < n;) {
      int j = i + 1;
      while (j < n) {
        double fa = std::abs(path.freq_value(atom.freq[order[j - 1]]));
        double fb = std::abs(path.freq_value(atom.freq[order[j]]));
        if (std::abs(fa - fb) >= 1e-12) break;
        if (atom.freq[order[j - 1]] != atom.freq[order[j]])
          throw TieError("sector tie between distinct modes");
        ++j;
      }
      groups.push_back({i, j});
      i = j;
    }

    // enumerate the consistent orderings: permutations within tie groups
    std::vector<std::vector<int>> orderings{order};
    for (auto [b, e] : groups) {
      if (e - b < 2) continue;
      std::vector<int> block(order.begin() + b, order.begin() + e);
      std::sort(block.begin(), block.end());
      std::vector<std::vector<int>> next;
      do {
        for (auto o : orderings) {
          std::copy(block.begin(), block.end(), o.begin() + b);
          next.push_back(std::move(o));
        }
      } while (std::next_permutation(block.begin(), block.end()));
      orderings = std::move(next);
    }

    const double share = 1.0 / (double)orderings.size();
    for (const auto& sigma : orderings) {
      SpectralAtom re;
      re.weight = atom.weight * share;
      re.freq.resize(n);
      for (int j = 0; j < n; ++j) re.freq[j] = atom.freq[sigma[j]];
      auto& sec = out[sigma];
      sec.sigma = sigma;
      sec.atoms.push_back(std::move(re));
    }
  }
  return out;
}

std::vector<SpectralAtom> unsplit(const std::map<std::vector<int>, SectorMeasure>& sectors) {
  std::map<std::vector<int>, cplx> merged;
  for (const auto& [sigma, sec] : sectors) {
    const int n = (int)sigma.size();
    for (const auto& a : sec.atoms) {
      std::vector<int> freq(n);
      for (int j = 0; j < n; ++j) freq[sigma[j]] = a.freq[j];
      merged[freq] += a.weight;
    }
  }
  std::vector<SpectralAtom> out;
  for (const auto& [freq, w] : merged) out.push_back({freq, w});
  return out;
}

}  // namespace rrp
