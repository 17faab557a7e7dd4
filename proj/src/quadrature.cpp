#include "fracops/quadrature.hpp"

#include "fracops/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fracops {

TimeGrid::TimeGrid(double dt, std::size_t n) : dt_(dt), n_(n) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw GridError("time grid: dt must be positive and finite");
    if (n < 1) throw GridError("time grid: need at least one step");
}

TimeGrid TimeGrid::spanning(double t_max, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw GridError("time grid: dt must be positive and finite");
    if (!(t_max >= dt) || !std::isfinite(t_max)) throw GridError("time grid: need t_max >= dt");
    return TimeGrid(dt, static_cast<std::size_t>(std::llround(t_max / dt)));
}

Signal::Signal(TimeGrid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw GridError("signal: expected " + std::to_string(grid_.size()) + " values, got " +
                        std::to_string(values_.size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::domain_error("signal: non-finite value");
    }
}

Signal sample(const TimeGrid& grid, const std::function<double(double)>& fn) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = fn(grid.t(i));
    return Signal(grid, std::move(values));
}

SourceFunction SourceFunction::analytic(Fn derivative, double f0, Fn value) {
    if (!derivative) throw std::invalid_argument("analytic source needs a derivative");
    SourceFunction s;
    s.derivative_ = std::move(derivative);
    s.value_ = std::move(value);
    s.f0_ = f0;
    return s;
}

SourceFunction SourceFunction::sampled(TimeGrid grid, std::vector<double> samples) {
    if (samples.size() != grid.size()) {
        throw GridError("sampled source: expected " + std::to_string(grid.size()) + " samples, got " +
                        std::to_string(samples.size()));
    }
    SourceFunction s;
    s.f0_ = samples.front();
    s.grid_ = grid;
    s.samples_ = std::move(samples);
    return s;
}

double SourceFunction::derivative_eval(double t) const {
    if (!derivative_) throw std::logic_error("derivative_eval on a sampled source");
    return derivative_(t);
}

double SourceFunction::value_eval(double t) const {
    if (!value_) throw std::logic_error("source has no value function");
    return value_(t);
}

const TimeGrid& SourceFunction::sample_grid() const {
    if (!grid_) throw std::logic_error("sample_grid on an analytic source");
    return *grid_;
}

std::span<const double> SourceFunction::samples() const {
    if (!grid_) throw std::logic_error("samples on an analytic source");
    return samples_;
}

SourceFunction SourceFunction::sampled_on(const TimeGrid& grid) const {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = value_eval(grid.t(i));
    return sampled(grid, std::move(values));
}

SourceFunction combine(double a, const SourceFunction& f, double b, const SourceFunction& g) {
    if (!f.is_analytic() || !g.is_analytic()) {
        throw std::invalid_argument("combine: both sources must be analytic");
    }
    SourceFunction::Fn value;
    if (f.has_value() && g.has_value()) {
        value = [=](double t) { return a * f.value_eval(t) + b * g.value_eval(t); };
    }
    return SourceFunction::analytic(
        [=](double t) { return a * f.derivative_eval(t) + b * g.derivative_eval(t); },
        a * f.f0() + b * g.f0(), std::move(value));
}

std::string_view to_string(Preset p) noexcept {
    switch (p) {
        case Preset::Cube: return "cube";
        case Preset::NegCos: return "negcos";
        case Preset::Sin: return "sin";
        case Preset::Exp: return "exp";
    }
    return "?";
}

Preset parse_preset(std::string_view name) {
    for (Preset p : kAllPresets) {
        if (to_string(p) == name) return p;
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "' (expected cube, negcos, sin, exp)");
}

SourceFunction preset_function(Preset p) {
    switch (p) {
        case Preset::Cube:
            return SourceFunction::analytic([](double t) { return t * t; }, 0.0,
                                            [](double t) { return t * t * t / 3.0; });
        case Preset::NegCos:
            return SourceFunction::analytic([](double t) { return std::sin(t); }, -1.0,
                                            [](double t) { return -std::cos(t); });
        case Preset::Sin:
            return SourceFunction::analytic([](double t) { return std::cos(t); }, 0.0,
                                            [](double t) { return std::sin(t); });
        case Preset::Exp:
            return SourceFunction::analytic([](double t) { return std::exp(t); }, 1.0,
                                            [](double t) { return std::exp(t); });
    }
    throw std::logic_error("unknown preset");
}

SourceFunction preset_function(std::string_view name) { return preset_function(parse_preset(name)); }

namespace {

class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        const bool sum_dominates = std::fabs(sum_) >= std::fabs(x);
        const double big = sum_dominates ? sum_ : x;
        const double small = sum_dominates ? x : sum_;
        comp_ += (big - t) + small;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Weights of the two nodal values of a linear f' on a segment at lag m:
// int_{t_j}^{t_{j+1}} k(t_i - tau) f'(tau) dtau = head[m] f'(t_j) + tail[m] f'(t_{j+1}), m = i - j.
struct LagWeights {
    std::vector<double> head;
    std::vector<double> tail;
};

LagWeights lag_weights(const OperatorSpec& spec, const TimeGrid& grid) {
    const double dt = grid.dt();
    LagWeights w{std::vector<double>(grid.size(), 0.0), std::vector<double>(grid.size(), 0.0)};
    for (std::size_t m = 1; m <= grid.n(); ++m) {
        const double t = grid.t(m);
        w.head[m] = kernel_segment_integral(spec.kind, spec.order, t, 0.0, dt, 1.0, -1.0 / dt);
        w.tail[m] = kernel_segment_integral(spec.kind, spec.order, t, 0.0, dt, 0.0, 1.0 / dt);
    }
    return w;
}

// out[i] = prefactor * sum_{j < i} term(i, j), each sum compensated in the
// order j = 0, 1, ..., i - 1. Rows are processed four at a time so the
// independent accumulators overlap in the pipeline.
template <class Term>
void accumulate_rows(std::vector<double>& out, double prefactor, Term term) {
    constexpr std::size_t block = 4;
    const std::size_t size = out.size();
    std::size_t i = 1;
    for (; i + block <= size; i += block) {
        CompensatedSum acc[block];
        for (std::size_t j = 0; j < i; ++j) {
            for (std::size_t b = 0; b < block; ++b) acc[b].add(term(i + b, j));
        }
        for (std::size_t b = 1; b < block; ++b) {
            for (std::size_t j = i; j < i + b; ++j) acc[b].add(term(i + b, j));
        }
        for (std::size_t b = 0; b < block; ++b) out[i + b] = prefactor * acc[b].value();
    }
    for (; i < size; ++i) {
        CompensatedSum acc;
        for (std::size_t j = 0; j < i; ++j) acc.add(term(i, j));
        out[i] = prefactor * acc.value();
    }
}

Signal classical_derivative(const SourceFunction& source, const TimeGrid& grid) {
    std::vector<double> out(grid.size(), 0.0);
    if (source.is_analytic()) {
        for (std::size_t i = 1; i < out.size(); ++i) out[i] = source.derivative_eval(grid.t(i));
    } else {
        const auto f = source.samples();
        for (std::size_t i = 1; i < out.size(); ++i) out[i] = (f[i] - f[i - 1]) / grid.dt();
    }
    return Signal(grid, std::move(out));
}

}  // namespace

Signal apply_operator(const OperatorSpec& spec, const SourceFunction& source, const TimeGrid& grid) {
    spec.validate();
    if (!source.is_analytic() && !(source.sample_grid() == grid)) {
        throw GridError("apply_operator: sampled source grid does not match the evaluation grid");
    }
    if (spec.kind == KernelKind::C && spec.order.alpha() == 1.0) {
        return classical_derivative(source, grid);
    }

    const LagWeights w = lag_weights(spec, grid);
    const double prefactor = spec.prefactor();
    const std::size_t size = grid.size();
    std::vector<double> out(size, 0.0);

    if (source.is_analytic()) {
        std::vector<double> slope(size);
        for (std::size_t j = 0; j < size; ++j) slope[j] = source.derivative_eval(grid.t(j));
        accumulate_rows(out, prefactor, [&](std::size_t i, std::size_t j) {
            return w.head[i - j] * slope[j] + w.tail[i - j] * slope[j + 1];
        });
    } else {
        const auto f = source.samples();
        std::vector<double> segment_slope(grid.n());
        for (std::size_t j = 0; j < grid.n(); ++j) segment_slope[j] = (f[j + 1] - f[j]) / grid.dt();
        std::vector<double> full(size, 0.0);
        for (std::size_t m = 1; m < size; ++m) full[m] = w.head[m] + w.tail[m];
        accumulate_rows(out, prefactor,
                        [&](std::size_t i, std::size_t j) { return full[i - j] * segment_slope[j]; });
    }
    return Signal(grid, std::move(out));
}

}  // namespace fracops
