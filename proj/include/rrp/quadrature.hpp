#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace rrp {

struct QuadratureConfig {
  double M = 2.0;
  int j_min = -14;            // window: |z| in [M^j_min, M^{j_max+1})
  int j_max = 12;
  int points_per_scale = 8;   // deterministic grids (fBm sampler, 1-d sums)
  long long mc_samples = 200000;
  unsigned long long rng_seed = 1;
  double alpha = 0.2;
  int threads = 1;
  bool strict_integrability = true;

  void validate() const;
  double window_lo() const;
  double window_hi() const;
};

// Counter-based uniforms: value depends only on (seed, stream, index), so
// estimates are reproducible for any thread partition.
double counter_uniform(unsigned long long seed, unsigned long long stream,
                       unsigned long long index);
// standard normal pair via Box-Muller on counter uniforms
void counter_gaussian(unsigned long long seed, unsigned long long stream,
                      unsigned long long index, double& g1, double& g2);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long long n_samples = 0;
};

/*
 * Stratified importance-sampled Monte Carlo over `dims` momenta. Each
 * momentum is drawn with density proportional to 1/|z| on the signed
 * window (log-uniform over the M-adic scales), which flattens power-law
 * integrands; the importance weight is folded into the sample. Samples are
 * processed in fixed-size batches; the standard error comes from the
 * spread of batch means and the batch sums are reduced in a fixed order,
 * so results are bit-identical for any thread count.
 */
McEstimate stratified_mc(const QuadratureConfig& cfg, int dims,
                         const std::function<double(const double*)>& integrand,
                         unsigned long long stream_offset = 0);

}  // namespace rrp
