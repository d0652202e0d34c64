#include "rrp/path_model.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "rrp/errors.hpp"

namespace rrp {

PathModel::PathModel(int d, double horizon, std::vector<std::vector<Mode>> modes)
    : d_(d), horizon_(horizon), modes_(std::move(modes)) {
  if ((int)modes_.size() != d_) throw std::invalid_argument("modes per coordinate mismatch");
  by_coord_.resize(d_);
  for (int c = 0; c < d_; ++c) {
    for (const auto& m : modes_[c]) {
      if (m.omega == 0.0) throw std::invalid_argument("zero frequency mode");
      by_coord_[c].push_back((int)freq_.size());
      freq_.push_back(m.omega);
      weight_.push_back(cplx(0.0, m.omega) * m.amp);
      coord_.push_back(c + 1);
    }
  }
}

const std::vector<Mode>& PathModel::modes(int coord) const { return modes_.at(coord - 1); }
const std::vector<int>& PathModel::freq_indices(int coord) const { return by_coord_.at(coord - 1); }

cplx PathModel::gamma(int coord, double t) const {
  cplx s = 0.0;
  for (const auto& m : modes_.at(coord - 1))
    s += m.amp * std::exp(cplx(0.0, m.omega * t));
  return s;
}

cplx PathModel::dgamma(int coord, double t) const {
  cplx s = 0.0;
  for (const auto& m : modes_.at(coord - 1))
    s += cplx(0.0, m.omega) * m.amp * std::exp(cplx(0.0, m.omega * t));
  return s;
}

void PathModel::validate_genericity(int max_n) const {
  const int F = n_freqs();
  for (int a = 0; a < F; ++a)
    for (int b = a + 1; b < F; ++b)
      if (std::abs(std::abs(freq_[a]) - std::abs(freq_[b])) < 1e-12)
        throw TieError("two modes share the same |omega|");

  // all signed combinations with total multiplicity <= max_n must be nonzero
  std::vector<int> coeff(F, 0);
  std::function<void(int, int, double)> rec = [&](int idx, int budget, double sum) {
    if (idx == F) {
      bool nontrivial = false;
      for (int c : coeff)
        if (c != 0) nontrivial = true;
      if (nontrivial && std::abs(sum) < 1e-9)
        throw DegenerateDenominator("vanishing frequency combination");
      return;
    }
    for (int c = -budget; c <= budget; ++c) {
      coeff[idx] = c;
      rec(idx + 1, budget - std::abs(c), sum + c * freq_[idx]);
    }
    coeff[idx] = 0;
  };
  rec(0, max_n, 0.0);
}

namespace {

double nth_prime_sqrt(int k) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  return std::sqrt((double)primes[k % 12]) * (1 + k / 12);
}

unsigned long long mix(unsigned long long x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit(unsigned long long h) { return (double)(h >> 11) / (double)(1ULL << 53); }

}  // namespace

PathModel PathModel::generic(int d, int modes_per_coord, unsigned seed) {
  std::vector<std::vector<Mode>> modes(d);
  int k = 0;
  for (int c = 0; c < d; ++c)
    for (int m = 0; m < modes_per_coord; ++m, ++k) {
      double w = nth_prime_sqrt(k) * (k % 2 ? -1.0 : 1.0);
      unsigned long long h = mix(seed * 1000003ULL + k);
      cplx amp(0.25 + unit(h), unit(mix(h)) - 0.5);
      modes[c].push_back({w, amp});
    }
  return PathModel(d, 1.0, std::move(modes));
}

PathModel PathModel::real_path(int d, int modes_per_coord, unsigned seed) {
  std::vector<std::vector<Mode>> modes(d);
  int k = 0;
  for (int c = 0; c < d; ++c)
    for (int m = 0; m < modes_per_coord; ++m, ++k) {
      double w = nth_prime_sqrt(k);
      unsigned long long h = mix(seed * 7778777ULL + k);
      cplx amp(0.25 + unit(h), unit(mix(h)) - 0.5);
      modes[c].push_back({w, amp});
      modes[c].push_back({-w, std::conj(amp)});
    }
  return PathModel(d, 1.0, std::move(modes));
}

}  // namespace rrp
