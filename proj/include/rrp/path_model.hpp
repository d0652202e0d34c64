#pragma once

#include <complex>
#include <vector>

namespace rrp {

using cplx = std::complex<double>;

struct Mode {
  double omega;  // nonzero frequency
  cplx amp;      // amplitude c, so the mode contributes c * exp(i omega t)
};

/*
 * Finite-Fourier-mode path Gamma_t(i) = sum_k c_{i,k} exp(i w_{i,k} t),
 * i = 1..d. All integrals against dGamma become finite sums over "atoms",
 * one per choice of mode at each slot; the atom weight of slot j is
 * i * w * c (the derivative of the mode).
 *
 * Real paths require conjugate-closed mode pairs (w,c),(-w,conj c); those
 * have tied |w| across slots and are fine at level 1 but not generic for
 * the sector machinery. The generic fixtures used for n >= 2 are complex.
 */
class PathModel {
 public:
  PathModel(int d, double horizon, std::vector<std::vector<Mode>> modes);

  int dim() const { return d_; }
  double horizon() const { return horizon_; }
  const std::vector<Mode>& modes(int coord) const;  // coord in 1..d

  cplx gamma(int coord, double t) const;
  cplx dgamma(int coord, double t) const;  // Gamma'_t(coord)

  // Pooled frequency table; atoms refer to frequencies by global index.
  int n_freqs() const { return (int)freq_.size(); }
  double freq_value(int idx) const { return freq_[idx]; }
  cplx atom_weight(int idx) const { return weight_[idx]; }  // i * w * c
  int coord_of_freq(int idx) const { return coord_[idx]; }
  const std::vector<int>& freq_indices(int coord) const;

  // Checks that all |w| are pairwise distinct across physically distinct
  // modes and that every signed integer combination of frequencies with at
  // most max_n terms is nonzero (skeleton denominators never vanish).
  // Throws TieError / DegenerateDenominator otherwise.
  void validate_genericity(int max_n) const;

  // Fixtures. generic(): complex amplitudes, square-root-of-prime
  // frequencies (no integer combination vanishes). real_path(): conjugate
  // closed, usable at level 1.
  static PathModel generic(int d, int modes_per_coord, unsigned seed);
  static PathModel real_path(int d, int modes_per_coord, unsigned seed);

 private:
  int d_;
  double horizon_;
  std::vector<std::vector<Mode>> modes_;
  std::vector<double> freq_;
  std::vector<cplx> weight_;
  std::vector<int> coord_;
  std::vector<std::vector<int>> by_coord_;
};

}  // namespace rrp
