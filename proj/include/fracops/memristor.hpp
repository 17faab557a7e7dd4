#pragma once

#include "fracops/quadrature.hpp"

#include <vector>

namespace fracops {

/// Charge-controlled memristor with M(q) = q driven by I(t) = sin t.
struct MemristorState {
    TimeGrid grid;
    Signal current;  // I(t) = sin t
    Signal charge;   // q(t) = 1 - cos t
    Signal voltage;  // V(t) = q(t) I(t)
};

MemristorState build_memristor(const TimeGrid& grid);

/// Closed form of the voltage, sin t - sin(2t)/2.
double memristor_voltage(double t);

struct VIPoint {
    double current;
    double voltage;
};

/// (I, V) pairs in time order. Throws IntervalError if the grid covers less
/// than one period of the drive (n dt < 2 pi).
std::vector<VIPoint> vi_curve(const MemristorState& state);

/// The sine-kernel operator with alpha = 2/3, N = 1/2, which maps q(t) to V(t)
/// exactly in the continuum.
OperatorSpec memristor_ds_operator();

/// Max over the grid of |D_sin q (t_i) - V(t_i)|, i.e. pure discretization error.
double verify_ds_linearization(const TimeGrid& grid);

/// V(t) ~ c0 * Caputo^exponent q(t) on [t_lo, t_hi].
struct WindowApprox {
    double t_lo;
    double t_hi;
    double exponent;
    double c0;

    /// Throws IntervalError unless 0 < t_lo < t_hi, and OrderError unless
    /// 0 < exponent < 1.
    void validate() const;
};

/// [3.7, 4.24], exponent 8/9, c0 = (10/3) Gamma(1/9).
WindowApprox early_window();
/// [6.82, 7.35], exponent 43/70, c0 = 5 Gamma(27/70).
WindowApprox late_window();

struct WindowReport {
    /// max over the window of |(3/10) sin 2t - t^-exponent|
    double kernel_gap;
    /// max over grid nodes in the window of |V - c0 Caputo q|
    double voltage_gap;
    /// Constant c minimizing max |V - c Caputo q| over the same nodes.
    double fitted_c0;
    /// voltage_gap attained with fitted_c0.
    double fitted_voltage_gap;
};

/// Maximum of |(3/10) sin 2t - t^-exponent| on [t_lo, t_hi] (dense scan
/// refined around the largest sample).
double window_kernel_gap(double t_lo, double t_hi, double exponent);

/// Throws IntervalError if the window is not inside the grid span or holds no
/// grid node.
WindowReport caputo_window_check(const WindowApprox& w, const TimeGrid& grid);

}  // namespace fracops
