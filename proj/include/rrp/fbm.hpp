#pragma once

#include <vector>

#include "rrp/quadrature.hpp"

namespace rrp {

// 2 pi c_alpha with the normalization that makes the harmonizable kernel
// reproduce E[B_s B_t] = (|s|^{2a} + |t|^{2a} - |t-s|^{2a}) / 2; equals
// -4 Gamma(-2 alpha) cos(pi alpha).
double fbm_two_pi_c_alpha(double alpha);

/*
 * Harmonizable fBm on a truncated symmetric dyadic frequency grid:
 *   B_t(i) = (2 pi c_a)^{-1/2} int (e^{it xi} - 1)/(i xi) |xi|^{1/2-a} dW_xi(i)
 * with W_{-xi} = conj W_xi, discretized per scale with points_per_scale
 * geometric cells. Paths are real, coordinates independent, B_0 = 0
 * exactly, and everything is a deterministic function of (seed, sample).
 */
class FbmSampler {
 public:
  FbmSampler(int d, const QuadratureConfig& cfg);

  int dim() const { return d_; }
  std::size_t n_cells() const { return xi_.size(); }

  // one path: values[coord][time index]
  std::vector<std::vector<double>> sample(const std::vector<double>& times,
                                          long long path_index) const;

  // exact second moment of the discretized field (no sampling error)
  double grid_covariance(double s, double t) const;

 private:
  int d_;
  QuadratureConfig cfg_;
  double norm_;               // (2 pi c_a)^{-1/2}
  std::vector<double> xi_;    // positive frequencies
  std::vector<double> dxi_;   // cell widths
};

}  // namespace rrp
