#include "fracops/laplace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracops {

void LaplaceQuery::validate() const {
    if (!(s > 0.0) || !std::isfinite(s)) throw std::domain_error("laplace query: s must be positive");
    if (!std::isfinite(F_of_s) || !std::isfinite(f0)) {
        throw std::domain_error("laplace query: F(s) and f(0) must be finite");
    }
}

namespace {

double common_factor(const FractionalOrder& order, double normalization, const LaplaceQuery& q) {
    q.validate();
    (void)order.lambda();  // rejects alpha = 1
    const double a = order.alpha();
    const double b = 1.0 - a;
    return normalization / (b * b * q.s * q.s + a * a) * (q.s * q.F_of_s - q.f0);
}

}  // namespace

double ds_transform(const FractionalOrder& order, double normalization, const LaplaceQuery& q) {
    return order.alpha() * common_factor(order, normalization, q);
}

double dc_transform(const FractionalOrder& order, double normalization, const LaplaceQuery& q) {
    return q.s * (1.0 - order.alpha()) * common_factor(order, normalization, q);
}

double numerical_laplace(const Signal& signal, double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw std::domain_error("numerical_laplace: s must be positive");
    const TimeGrid& grid = signal.grid();
    if (s * grid.duration() < kLaplaceTruncation) {
        throw std::domain_error("numerical_laplace: s * T = " + std::to_string(s * grid.duration()) +
                                " is below the truncation threshold 20");
    }
    const auto g = signal.values();
    const std::size_t n = grid.n();
    double sum = 0.5 * (g[0] + g[n] * std::exp(-s * grid.t(n)));
    double comp = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double term = g[i] * std::exp(-s * grid.t(i));
        const double t = sum + term;
        comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return grid.dt() * (sum + comp);
}

double preset_transform(Preset p, double s) {
    if (!(s > 0.0)) throw std::domain_error("preset_transform: s must be positive");
    switch (p) {
        case Preset::Cube: return 2.0 / (s * s * s * s);
        case Preset::NegCos: return -s / (s * s + 1.0);
        case Preset::Sin: return 1.0 / (s * s + 1.0);
        case Preset::Exp:
            if (!(s > 1.0)) throw std::domain_error("preset_transform: L{e^t}(s) needs s > 1");
            return 1.0 / (s - 1.0);
    }
    throw std::logic_error("unknown preset");
}

double relative_gap(double numeric, double exact) {
    const double diff = std::fabs(numeric - exact);
    return exact == 0.0 ? diff : diff / std::fabs(exact);
}

}  // namespace fracops
