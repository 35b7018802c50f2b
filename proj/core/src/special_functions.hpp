#pragma once

#include <cmath>

namespace infoconc::detail {

inline double log_beta(double x, double y) {
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

}  // namespace infoconc::detail
