#include "fracops/memristor.hpp"

#include "fracops/errors.hpp"
#include "fracops/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fracops {

MemristorState build_memristor(const TimeGrid& grid) {
    Signal current = sample(grid, [](double t) { return std::sin(t); });
    Signal charge = sample(grid, [](double t) { return 1.0 - std::cos(t); });
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = charge[i] * current[i];
    return {grid, std::move(current), std::move(charge), Signal(grid, std::move(v))};
}

double memristor_voltage(double t) { return std::sin(t) - 0.5 * std::sin(2.0 * t); }

std::vector<VIPoint> vi_curve(const MemristorState& state) {
    if (state.grid.duration() < 2.0 * std::numbers::pi) {
        throw IntervalError("vi_curve: grid must span at least one period (2 pi)");
    }
    std::vector<VIPoint> out;
    out.reserve(state.grid.size());
    for (std::size_t i = 0; i < state.grid.size(); ++i) out.push_back({state.current[i], state.voltage[i]});
    return out;
}

OperatorSpec memristor_ds_operator() {
    return OperatorSpec{KernelKind::DS, FractionalOrder(2.0 / 3.0), 0.5};
}

namespace {

SourceFunction charge_source() {
    return SourceFunction::analytic([](double t) { return std::sin(t); }, 0.0,
                                    [](double t) { return 1.0 - std::cos(t); });
}

}  // namespace

double verify_ds_linearization(const TimeGrid& grid) {
    const Signal out = apply_operator(memristor_ds_operator(), charge_source(), grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::fabs(out[i] - memristor_voltage(grid.t(i))));
    }
    return worst;
}

void WindowApprox::validate() const {
    if (!(t_lo > 0.0 && t_lo < t_hi)) throw IntervalError("window: need 0 < t_lo < t_hi");
    if (!(exponent > 0.0 && exponent < 1.0)) throw OrderError("window: exponent must lie in (0, 1)");
}

WindowApprox early_window() { return {3.7, 4.24, 8.0 / 9.0, 10.0 / 3.0 * gamma(1.0 / 9.0)}; }

WindowApprox late_window() { return {6.82, 7.35, 43.0 / 70.0, 5.0 * gamma(27.0 / 70.0)}; }

double window_kernel_gap(double t_lo, double t_hi, double exponent) {
    auto gap = [exponent](double t) { return std::fabs(0.3 * std::sin(2.0 * t) - std::pow(t, -exponent)); };
    constexpr int kSamples = 10000;
    const double h = (t_hi - t_lo) / kSamples;
    int best_k = 0;
    double best = gap(t_lo);
    for (int k = 1; k <= kSamples; ++k) {
        const double g = gap(t_lo + k * h);
        if (g > best) {
            best = g;
            best_k = k;
        }
    }
    if (best_k == 0 || best_k == kSamples) return best;

    // Golden-section refinement of the interior maximum.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = t_lo + (best_k - 1) * h;
    double b = t_lo + (best_k + 1) * h;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double g1 = gap(x1);
    double g2 = gap(x2);
    for (int it = 0; it < 80; ++it) {
        if (g1 > g2) {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - phi * (b - a);
            g1 = gap(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + phi * (b - a);
            g2 = gap(x2);
        }
    }
    return std::max({best, g1, g2});
}

WindowReport caputo_window_check(const WindowApprox& w, const TimeGrid& grid) {
    w.validate();
    if (w.t_hi > grid.duration() + 1e-9 * grid.dt()) throw IntervalError("window extends beyond the grid span");

    const OperatorSpec caputo{KernelKind::C, FractionalOrder(w.exponent), 1.0};
    const Signal d = apply_operator(caputo, charge_source(), grid);

    // Nodes within rounding of an endpoint count as inside.
    const double slack = 1e-9 * grid.dt();
    std::vector<double> v_nodes;
    std::vector<double> d_nodes;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        if (t < w.t_lo - slack || t > w.t_hi + slack) continue;
        v_nodes.push_back(memristor_voltage(t));
        d_nodes.push_back(d[i]);
    }
    if (v_nodes.empty()) throw IntervalError("window contains no grid node");

    auto sup_gap = [&](double c) {
        double worst = 0.0;
        for (std::size_t k = 0; k < v_nodes.size(); ++k) {
            worst = std::max(worst, std::fabs(v_nodes[k] - c * d_nodes[k]));
        }
        return worst;
    };

    // The minimax constant lies between the extreme ratios V/D.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t k = 0; k < v_nodes.size(); ++k) {
        if (d_nodes[k] == 0.0) continue;
        const double r = v_nodes[k] / d_nodes[k];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    double fitted = 0.0;
    if (lo <= hi) {
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = lo;
        double b = hi;
        for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::fabs(b)); ++it) {
            const double x1 = b - phi * (b - a);
            const double x2 = a + phi * (b - a);
            if (sup_gap(x1) <= sup_gap(x2)) {
                b = x2;
            } else {
                a = x1;
            }
        }
        fitted = 0.5 * (a + b);
    }

    return {window_kernel_gap(w.t_lo, w.t_hi, w.exponent), sup_gap(w.c0), fitted, sup_gap(fitted)};
}

}  // namespace fracops
