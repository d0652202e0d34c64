#include "rrp/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace rrp {

void QuadratureConfig::validate() const {
  if (M <= 1.0) throw std::invalid_argument("M must exceed 1");
  if (j_max < j_min) throw std::invalid_argument("empty scale window");
  if (alpha <= 0.0 || alpha >= 1.0) throw std::invalid_argument("alpha must be in (0,1)");
  if (points_per_scale < 1 || mc_samples < 1) throw std::invalid_argument("bad budgets");
}

double QuadratureConfig::window_lo() const { return std::pow(M, j_min); }
double QuadratureConfig::window_hi() const { return std::pow(M, j_max + 1); }

namespace {

unsigned long long mix64(unsigned long long x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double counter_uniform(unsigned long long seed, unsigned long long stream,
                       unsigned long long index) {
  unsigned long long h = mix64(seed ^ mix64(stream ^ mix64(index)));
  return ((double)(h >> 11) + 0.5) / (double)(1ULL << 53);
}

void counter_gaussian(unsigned long long seed, unsigned long long stream,
                      unsigned long long index, double& g1, double& g2) {
  double u1 = counter_uniform(seed, stream * 2 + 1, index);
  double u2 = counter_uniform(seed, stream * 2 + 2, index);
  double r = std::sqrt(-2.0 * std::log(u1));
  g1 = r * std::cos(2.0 * M_PI * u2);
  g2 = r * std::sin(2.0 * M_PI * u2);
}

McEstimate stratified_mc(const QuadratureConfig& cfg, int dims,
                         const std::function<double(const double*)>& integrand,
                         unsigned long long stream_offset) {
  cfg.validate();
  const int n_batches = 64;
  const long long per_batch = std::max(1LL, cfg.mc_samples / n_batches);
  const long long total = per_batch * n_batches;
  const double span = (double)(cfg.j_max + 1 - cfg.j_min);
  const double lnM = std::log(cfg.M);
  // density of |z|: 1 / (|z| lnM span) on [M^jmin, M^{jmax+1}); sign 1/2
  const double weight_scale = 2.0 * lnM * span;

  std::vector<double> batch_mean(n_batches, 0.0);
  auto run_batch = [&](int b) {
    std::vector<double> z(dims);
    double acc = 0.0;
    for (long long k = 0; k < per_batch; ++k) {
      unsigned long long idx = (unsigned long long)b * per_batch + k;
      double w = 1.0;
      for (int i = 0; i < dims; ++i) {
        double u = counter_uniform(cfg.rng_seed, stream_offset + 2 * i, idx);
        double v = counter_uniform(cfg.rng_seed, stream_offset + 2 * i + 1, idx);
        double mag = std::pow(cfg.M, cfg.j_min + u * span);
        z[i] = (v < 0.5) ? -mag : mag;
        w *= mag * weight_scale;
      }
      acc += w * integrand(z.data());
    }
    batch_mean[b] = acc / (double)per_batch;
  };

  int n_threads = std::max(1, cfg.threads);
  if (n_threads == 1) {
    for (int b = 0; b < n_batches; ++b) run_batch(b);
  } else {
    std::vector<std::thread> pool;
    for (int tid = 0; tid < n_threads; ++tid)
      pool.emplace_back([&, tid]() {
        for (int b = tid; b < n_batches; b += n_threads) run_batch(b);
      });
    for (auto& th : pool) th.join();
  }

  McEstimate est;
  est.n_samples = total;
  double mean = 0.0;
  for (int b = 0; b < n_batches; ++b) mean += batch_mean[b];
  mean /= n_batches;
  double var = 0.0;
  for (int b = 0; b < n_batches; ++b)
    var += (batch_mean[b] - mean) * (batch_mean[b] - mean);
  var /= (n_batches - 1);
  est.value = mean;
  est.std_error = std::sqrt(var / n_batches);
  return est;
}

}  // namespace rrp
