#pragma once

namespace fracops {

/// Gamma function for x > 0.
///
/// Throws std::domain_error for x <= 0 (or NaN) and std::overflow_error when
/// the result is not representable as a double (x > ~171.6).
double gamma(double x);

/// Supported argument window of mittag_leffler(): z in [-1000, 50].
inline constexpr double kMittagLefflerMinArg = -1000.0;
inline constexpr double kMittagLefflerMaxArg = 50.0;

/// One-parameter Mittag-Leffler function E_alpha(z) = sum z^k / Gamma(1 + alpha k)
/// for real z and alpha in (0, 1].
///
/// Supported window: -1000 <= z <= 50. For z >= 0 and for small negative z the power
/// series is summed in extended precision with compensation until the increment
/// falls below 1e-15 of the partial sum (at most 10,000 terms). Negative
/// arguments large enough to make the alternating series cancel are evaluated
/// from the integral representation instead.
///
/// Throws std::domain_error for alpha outside (0, 1] or z outside the window,
/// std::overflow_error if the value exceeds double range, and
/// std::runtime_error if the series does not converge within the term cap.
double mittag_leffler(double alpha, double z);

}  // namespace fracops
