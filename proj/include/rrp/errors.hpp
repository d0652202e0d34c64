#pragma once

#include <stdexcept>

namespace rrp {

struct TieError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidContraction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlphaRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonIntegrable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rrp
