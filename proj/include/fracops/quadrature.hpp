#pragma once

#include "fracops/kernels.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace fracops {

/// Uniform grid t_i = i * dt, i = 0..n, anchored at t = 0.
class TimeGrid {
public:
    /// Throws GridError unless dt > 0 (finite) and n >= 1.
    TimeGrid(double dt, std::size_t n);

    /// Grid covering [0, t_max] with step dt; n = round(t_max / dt).
    static TimeGrid spanning(double t_max, double dt);

    double dt() const noexcept { return dt_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return n_ + 1; }
    double t(std::size_t i) const noexcept { return static_cast<double>(i) * dt_; }
    double duration() const noexcept { return t(n_); }

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

private:
    double dt_;
    std::size_t n_;
};

/// Real samples on a TimeGrid.
class Signal {
public:
    /// Throws GridError on a length mismatch and std::domain_error on a
    /// non-finite entry.
    Signal(TimeGrid grid, std::vector<double> values);

    const TimeGrid& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    TimeGrid grid_;
    std::vector<double> values_;
};

/// Samples fn(t_i) over the grid.
Signal sample(const TimeGrid& grid, const std::function<double(double)>& fn);

/// The function f an operator acts on: either an analytic derivative f'
/// (optionally with f itself) or samples of f on a grid.
class SourceFunction {
public:
    using Fn = std::function<double(double)>;

    static SourceFunction analytic(Fn derivative, double f0, Fn value = {});
    /// f0 is taken from samples[0]. Throws GridError unless
    /// samples.size() == grid.n() + 1.
    static SourceFunction sampled(TimeGrid grid, std::vector<double> samples);

    bool is_analytic() const noexcept { return static_cast<bool>(derivative_); }
    double f0() const noexcept { return f0_; }

    /// f'(t). Throws std::logic_error in sampled mode.
    double derivative_eval(double t) const;
    /// f(t). Throws std::logic_error if no value function is available.
    double value_eval(double t) const;
    bool has_value() const noexcept { return static_cast<bool>(value_); }

    /// Sampled-mode data. Throws std::logic_error in analytic mode.
    const TimeGrid& sample_grid() const;
    std::span<const double> samples() const;

    /// Sampled-mode copy of an analytic source carrying f.
    SourceFunction sampled_on(const TimeGrid& grid) const;

private:
    SourceFunction() = default;

    Fn derivative_;
    Fn value_;
    double f0_ = 0.0;
    std::optional<TimeGrid> grid_;
    std::vector<double> samples_;
};

/// a*f + b*g for analytic sources.
SourceFunction combine(double a, const SourceFunction& f, double b, const SourceFunction& g);

enum class Preset { Cube, NegCos, Sin, Exp };

inline constexpr std::array<Preset, 4> kAllPresets = {Preset::Cube, Preset::NegCos, Preset::Sin,
                                                      Preset::Exp};

std::string_view to_string(Preset p) noexcept;
/// Throws std::invalid_argument for names other than cube, negcos, sin, exp.
Preset parse_preset(std::string_view name);

/// t^3/3, -cos t, sin t, e^t with exact derivative and value.
SourceFunction preset_function(Preset p);
SourceFunction preset_function(std::string_view name);

/// Evaluates the operator at every grid node by product integration.
///
/// f' is replaced by its piecewise-linear interpolant through f'(t_j)
/// (analytic mode) or by the per-segment difference quotient of the samples
/// (sampled mode; the L1 scheme for the Caputo kernel), and each segment is
/// integrated exactly against the kernel. output[0] = 0. Each output entry is
/// accumulated over j = 0..i-1 in that order with compensated summation.
///
/// Caputo at alpha = 1 returns the classical derivative (its limit).
/// Throws GridError if a sampled source lives on a different grid.
Signal apply_operator(const OperatorSpec& spec, const SourceFunction& source, const TimeGrid& grid);

}  // namespace fracops
