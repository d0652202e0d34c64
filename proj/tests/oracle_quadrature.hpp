#pragma once

// Brute-force quadrature oracles, independent of the library's algebraic
// evaluation paths. Used to pin expected values for iterated integrals.

#include <cmath>
#include <functional>
#include <vector>

#include "rrp/path_model.hpp"
#include "rrp/words.hpp"

namespace oracle {

struct GaussLegendre {
  std::vector<double> x, w;  // nodes/weights on [-1, 1]

  explicit GaussLegendre(int n) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
      // Newton iteration from the Chebyshev initial guess
      double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = xi;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
        double step = p1 / dp;
        xi -= step;
        if (std::abs(step) < 1e-15) break;
      }
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      x[i] = xi;
      w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
  }
};

// int_a^b f(y) dy by Gauss-Legendre
inline rrp::cplx integrate(const GaussLegendre& gl, double a, double b,
                           const std::function<rrp::cplx(double)>& f) {
  rrp::cplx acc(0.0, 0.0);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < gl.x.size(); ++i)
    acc += gl.w[i] * f(mid + half * gl.x[i]);
  return half * acc;
}

// I^{ts}(i1..in) = int_s^t dGamma(i1) int_s^{x1} dGamma(i2) ... by nested
// quadrature of the path derivative.
inline rrp::cplx nested_iterated(const rrp::PathModel& path, const rrp::Word& w,
                                 double s, double t, int gl_order = 24) {
  GaussLegendre gl(gl_order);
  std::function<rrp::cplx(std::size_t, double)> level = [&](std::size_t m, double upper) {
    if (m == w.size()) return rrp::cplx(1.0, 0.0);
    return integrate(gl, s, upper, [&](double y) {
      return path.dgamma(w[m], y) * level(m + 1, y);
    });
  };
  return level(0, t);
}

}  // namespace oracle
