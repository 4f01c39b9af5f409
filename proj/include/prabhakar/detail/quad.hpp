#pragma once

// Thin wrappers over libquadmath so templates can be written once for
// long double and __float128.

#include <quadmath.h>

#include <cmath>
#include <limits>

namespace prabhakar::detail {

using quad = __float128;

template <typename Real>
constexpr Real epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

template <>
constexpr quad epsilon<quad>() {
  return quad(1) / quad(1ULL << 56) / quad(1ULL << 56);
}

}  // namespace prabhakar::detail
