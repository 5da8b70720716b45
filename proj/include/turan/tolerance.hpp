#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace turan {

inline constexpr std::size_t kDefaultMaxDegree = 2000;
inline constexpr std::size_t kDefaultHorizon = 1000;

/// Slack applied to every inequality between coefficients. Closed-form
/// formulas and normalized tables carry rounding at this level, and
/// exact-equality families (Chebyshev) must pass.
inline constexpr double kComparisonSlack = 1e-12;

inline double comparison_scale(double a, double b) {
  return std::max({1.0, std::abs(a), std::abs(b)});
}

/// a ≤ b up to kComparisonSlack.
inline bool approx_le(double a, double b) {
  return a <= b + kComparisonSlack * comparison_scale(a, b);
}

inline bool approx_ge(double a, double b) { return approx_le(b, a); }

inline bool approx_eq(double a, double b) {
  return std::abs(a - b) <= kComparisonSlack * comparison_scale(a, b);
}

}  // namespace turan
