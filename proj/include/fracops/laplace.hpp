#pragma once

#include "fracops/kernels.hpp"
#include "fracops/quadrature.hpp"

namespace fracops {

/// A point s > 0 on the real axis with F(s) = L{f}(s) and f(0).
struct LaplaceQuery {
    double s;
    double F_of_s;
    double f0;

    /// Throws std::domain_error unless s > 0 and all fields are finite.
    void validate() const;
};

/// Closed-form transform of the sine-kernel operator:
/// alpha N / ((1-alpha)^2 s^2 + alpha^2) * (s F(s) - f(0)).
/// Throws OrderError at alpha = 1.
double ds_transform(const FractionalOrder& order, double normalization, const LaplaceQuery& q);

/// Closed-form transform of the cosine-kernel operator:
/// s (1-alpha) N / ((1-alpha)^2 s^2 + alpha^2) * (s F(s) - f(0)).
/// Throws OrderError at alpha = 1.
double dc_transform(const FractionalOrder& order, double normalization, const LaplaceQuery& q);

/// Minimum s * duration accepted by numerical_laplace().
inline constexpr double kLaplaceTruncation = 20.0;

/// Trapezoidal approximation of int_0^T e^{-st} g(t) dt over the signal's grid.
///
/// The tail beyond T is neglected; the caller must have s * T >= 20 (checked,
/// std::domain_error otherwise), which bounds the neglected part by ~2e-9 of
/// the transform for bounded signals. Signals of exponential order c need
/// (s - c) T >= 20 instead, which this function cannot check.
double numerical_laplace(const Signal& signal, double s);

/// L{f}(s) for a preset source. Throws std::domain_error where the transform
/// does not exist (s <= 1 for exp).
double preset_transform(Preset p, double s);

/// Relative gap |numeric - exact| / |exact|; the absolute gap when exact == 0.
double relative_gap(double numeric, double exact);

}  // namespace fracops
