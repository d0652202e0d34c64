#pragma once

#include <string>
#include <vector>

namespace rrp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exact-arithmetic invariant suite: Hopf axioms on trees and words,
// theta morphism, permutation-graph resolution, published omega* lists,
// forest classification. Runs in a few seconds.
std::vector<CheckResult> quick_checks();

// Adds the numeric smoke suite: sector reconstruction, skeleton character,
// recombination, both rough-path routes, Chen/shuffle residuals, fBm
// covariance and estimator determinism. Budgeted for interactive use.
std::vector<CheckResult> full_checks(unsigned long long seed = 1);

}  // namespace rrp
