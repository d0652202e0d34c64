#pragma once

#include "rrp/forests.hpp"
#include "rrp/quadrature.hpp"
#include "rrp/scales.hpp"
#include "rrp/words.hpp"

namespace rrp {

struct AmplitudeEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long long n_samples = 0;
};

enum class RenormMode { none, bphz };

/*
 * Numeric value of the symmetric amplitude A_G(zeta_ext) of a (possibly
 * subtracted) tree half-diagram expression: the squared half-amplitude
 * integrated over the free internal momenta with dyadic-stratified
 * importance sampling. The overall delta function is resolved by solving
 * for one bridge momentum; contracted pairs get independent momenta on the
 * two mirror sides.
 *
 * With strict_integrability set, evaluating an unsubtracted expression
 * whose proper subgraphs have positive divergence degree raises
 * NonIntegrable instead of silently producing a window-dependent number.
 */
AmplitudeEstimate evaluate_amplitude(const AmplitudeExpression& expr,
                                     const std::vector<double>& root_zeta,
                                     const QuadratureConfig& cfg);

// Same integrand under a caller-chosen parameterization of the internal
// momenta: fill_zeta maps the sampled variables to per-vertex zeta values
// (the published example-2 region uses (xi1, zeta2, zeta3), for instance).
AmplitudeEstimate evaluate_amplitude_routed(
    const AmplitudeExpression& expr, int dims,
    const std::function<void(const double*, std::vector<double>&)>& fill_zeta,
    const QuadratureConfig& cfg);

// Estimates over a growing UV window, sharing all other settings. The
// integrand is a square, so successive values increase by construction;
// used by the renormalization-necessity witness.
std::vector<AmplitudeEstimate> amplitude_window_scan(const AmplitudeExpression& expr,
                                                     const std::vector<double>& root_zeta,
                                                     QuadratureConfig cfg,
                                                     const std::vector<int>& jmax_list);

// Keep only the forest terms whose members are local divergent subgraphs
// of the given attribution (the scale-dependent useful renormalization).
AmplitudeExpression filter_useful(const AmplitudeExpression& expr,
                                  const ScaleAttribution& mu);

// Var J^{ts}(word) for fBm from renormalized skeleton data, |word| in
// {1, 2}. Distinct letters pair diagonally; equal letters add the exchange
// pairing. The t,s dependence enters through the oscillatory root factors.
AmplitudeEstimate variance_J(const Word& word, double s, double t,
                             const QuadratureConfig& cfg,
                             RenormMode mode = RenormMode::bphz);

struct ScanPoint {
  double x;
  AmplitudeEstimate y;
};

struct ScanResult {
  std::vector<ScanPoint> points;
  double slope = 0.0;
  double slope_err = 0.0;
  double intercept = 0.0;
  int n_used = 0;
};

// Weighted least-squares slope on log-log axes. Points with nonpositive
// value or relative error above the cap are excluded; fewer than 4
// admissible points raises InsufficientData.
ScanResult fit_scaling(const std::vector<ScanPoint>& pts, double rel_err_cap = 0.5);

}  // namespace rrp
