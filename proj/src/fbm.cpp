#include "rrp/fbm.hpp"

#include <cmath>
#include <complex>

namespace rrp {

double fbm_two_pi_c_alpha(double alpha) {
  return -4.0 * std::tgamma(-2.0 * alpha) * std::cos(M_PI * alpha);
}

FbmSampler::FbmSampler(int d, const QuadratureConfig& cfg) : d_(d), cfg_(cfg) {
  cfg.validate();
  norm_ = 1.0 / std::sqrt(fbm_two_pi_c_alpha(cfg.alpha));
  for (int j = cfg.j_min; j <= cfg.j_max; ++j) {
    double lo = std::pow(cfg.M, j), hi = std::pow(cfg.M, j + 1);
    double step = (hi - lo) / cfg.points_per_scale;
    for (int p = 0; p < cfg.points_per_scale; ++p) {
      xi_.push_back(lo + (p + 0.5) * step);
      dxi_.push_back(step);
    }
  }
}

std::vector<std::vector<double>> FbmSampler::sample(const std::vector<double>& times,
                                                    long long path_index) const {
  std::vector<std::vector<double>> out(d_, std::vector<double>(times.size(), 0.0));
  const double a = cfg_.alpha;
  for (int c = 0; c < d_; ++c) {
    for (std::size_t k = 0; k < xi_.size(); ++k) {
      double g1, g2;
      unsigned long long stream = 1000003ULL * (unsigned long long)(c + 1) + k;
      counter_gaussian(cfg_.rng_seed, stream, (unsigned long long)path_index, g1, g2);
      // complex increment z = (g1 + i g2)/sqrt(2), conjugate cell at -xi
      const std::complex<double> z(g1 / std::sqrt(2.0), g2 / std::sqrt(2.0));
      double amp = norm_ * std::pow(xi_[k], 0.5 - a) * std::sqrt(dxi_[k]);
      for (std::size_t ti = 0; ti < times.size(); ++ti) {
        std::complex<double> kern =
            (std::exp(std::complex<double>(0.0, times[ti] * xi_[k])) - 1.0) /
            std::complex<double>(0.0, xi_[k]);
        out[c][ti] += 2.0 * amp * std::real(kern * z);
      }
    }
  }
  return out;
}

double FbmSampler::grid_covariance(double s, double t) const {
  const double a = cfg_.alpha;
  double acc = 0.0;
  for (std::size_t k = 0; k < xi_.size(); ++k) {
    double xi = xi_[k];
    // 2 Re[ kern(t) conj(kern(s)) ] summed over +- xi
    double re = (std::cos((t - s) * xi) - std::cos(t * xi) - std::cos(s * xi) + 1.0) /
                (xi * xi);
    acc += 2.0 * re * std::pow(xi, 1.0 - 2.0 * a) * dxi_[k];
  }
  return acc * norm_ * norm_;
}

}  // namespace rrp
