#include "fracops/kernels.hpp"

#include "fracops/errors.hpp"
#include "fracops/specfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace fracops {

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw OrderError("fractional order must lie in (0, 1], got " + std::to_string(alpha));
    }
}

double FractionalOrder::lambda() const {
    if (alpha_ == 1.0) {
        throw OrderError("kernel frequency alpha/(1-alpha) is undefined at alpha = 1");
    }
    return alpha_ / (1.0 - alpha_);
}

std::string_view to_string(KernelKind kind) noexcept {
    switch (kind) {
        case KernelKind::C: return "c";
        case KernelKind::CF: return "cf";
        case KernelKind::AB: return "ab";
        case KernelKind::DS: return "ds";
        case KernelKind::DC: return "dc";
    }
    return "?";
}

std::optional<KernelKind> parse_kernel_kind(std::string_view name) noexcept {
    for (KernelKind k : kAllKernelKinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

void OperatorSpec::validate() const {
    if (!(normalization > 0.0) || !std::isfinite(normalization)) {
        throw std::invalid_argument("operator normalization must be positive and finite");
    }
    if (uses_lambda(kind)) (void)order.lambda();
}

double OperatorSpec::prefactor() const {
    const double alpha = order.alpha();
    if (kind == KernelKind::C) {
        if (alpha == 1.0) return 0.0;  // limit handled by the caller
        return 1.0 / gamma(1.0 - alpha);
    }
    return normalization / (1.0 - alpha);
}

double kernel_eval(KernelKind kind, const FractionalOrder& order, double t) {
    if (!(t >= 0.0)) throw std::domain_error("kernel_eval: t must be non-negative");
    const double alpha = order.alpha();
    switch (kind) {
        case KernelKind::C:
            if (t == 0.0) throw std::domain_error("kernel_eval: Caputo kernel is singular at t = 0");
            return std::pow(t, -alpha);
        case KernelKind::CF: return std::exp(-order.lambda() * t);
        case KernelKind::AB: {
            const double lam = order.lambda();
            return mittag_leffler(alpha, -lam * std::pow(t, alpha));
        }
        case KernelKind::DS: return std::sin(order.lambda() * t);
        case KernelKind::DC: return std::cos(order.lambda() * t);
    }
    throw std::logic_error("kernel_eval: unknown kernel kind");
}

namespace {

using cplx = std::complex<double>;

// phi1(z) = int_0^1 e^{zu} du,  psi(z) = int_0^1 u e^{zu} du.
struct PhiPair {
    cplx phi1;
    cplx psi;
};

PhiPair phi_functions(cplx z) {
    if (std::abs(z) < 0.5) {
        // phi1 = sum z^k/(k+1)!,  psi = sum z^k/(k! (k+2))
        cplx phi1 = 0.0;
        cplx psi = 0.0;
        cplx zk_over_kfact = 1.0;
        for (int k = 0; k < 30; ++k) {
            phi1 += zk_over_kfact / static_cast<double>(k + 1);
            psi += zk_over_kfact / static_cast<double>(k + 2);
            zk_over_kfact *= z / static_cast<double>(k + 1);
            if (std::abs(zk_over_kfact) < 1e-18) break;
        }
        return {phi1, psi};
    }
    const cplx ez = std::exp(z);
    return {(ez - 1.0) / z, (z * ez - ez + 1.0) / (z * z)};
}

// Moments of k(s) = e^{mu s} over [s0, s0 + h]:
// m0 = int k,  m1 = int (s - s0) k.
struct Moments {
    double m0;
    double m1;
};

enum class Part { Real, Imag };

Moments exponential_moments(cplx mu, double s0, double h, Part part) {
    const PhiPair p = phi_functions(mu * h);
    const cplx base = std::exp(mu * s0);
    const cplx m0 = base * h * p.phi1;
    const cplx m1 = base * h * h * p.psi;
    if (part == Part::Real) return {m0.real(), m1.real()};
    return {m0.imag(), m1.imag()};
}

// int_0^r w (1 + w)^-alpha dw
double power_first_moment_ratio(double alpha, double r) {
    if (r <= 0.5) {
        double binom = 1.0;  // binom(-alpha, k)
        double rk = r * r;   // r^(k+2)
        double sum = 0.0;
        for (int k = 0; k < 200; ++k) {
            const double term = binom * rk / (k + 2);
            sum += term;
            if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
            binom *= (-alpha - k) / (k + 1);
            rk *= r;
        }
        return sum;
    }
    const double log1r = std::log1p(r);
    if (alpha == 1.0) return r - log1r;
    const double p1 = 1.0 - alpha;
    const double p2 = 2.0 - alpha;
    return std::expm1(p2 * log1r) / p2 - std::expm1(p1 * log1r) / p1;
}

Moments power_moments(double alpha, double s0, double h) {
    if (s0 == 0.0) {
        if (alpha == 1.0) {
            throw std::domain_error("kernel_segment_integral: t^-1 is not integrable at the origin");
        }
        return {std::pow(h, 1.0 - alpha) / (1.0 - alpha), std::pow(h, 2.0 - alpha) / (2.0 - alpha)};
    }
    const double r = h / s0;
    const double log1r = std::log1p(r);
    const double m0 = alpha == 1.0
                          ? log1r
                          : std::pow(s0, 1.0 - alpha) * std::expm1((1.0 - alpha) * log1r) / (1.0 - alpha);
    const double m1 = std::pow(s0, 2.0 - alpha) * power_first_moment_ratio(alpha, r);
    return {m0, m1};
}

double ab_segment(const FractionalOrder& order, double t, double a, double b, double c0, double c1) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t k = 0; k < GaussLegendre8::nodes.size(); ++k) {
        const double tau = mid + half * GaussLegendre8::nodes[k];
        sum += GaussLegendre8::weights[k] * kernel_eval(KernelKind::AB, order, t - tau) * (c0 + c1 * tau);
    }
    return half * sum;
}

}  // namespace

double kernel_segment_integral(KernelKind kind, const FractionalOrder& order, double t, double a,
                               double b, double c0, double c1) {
    if (!(a >= 0.0 && a < b && b <= t)) {
        throw IntervalError("kernel_segment_integral: need 0 <= a < b <= t");
    }
    if (kind == KernelKind::AB) return ab_segment(order, t, a, b, c0, c1);

    // s = t - tau runs over [s0, s0 + h]; c0 + c1 tau = value_at_b - c1 (s - s0).
    const double s0 = t - b;
    const double h = b - a;
    const double value_at_b = c0 + c1 * b;

    Moments m{};
    switch (kind) {
        case KernelKind::C: m = power_moments(order.alpha(), s0, h); break;
        case KernelKind::CF: m = exponential_moments(cplx(-order.lambda(), 0.0), s0, h, Part::Real); break;
        case KernelKind::DS: m = exponential_moments(cplx(0.0, order.lambda()), s0, h, Part::Imag); break;
        case KernelKind::DC: m = exponential_moments(cplx(0.0, order.lambda()), s0, h, Part::Real); break;
        case KernelKind::AB: break;
    }
    return value_at_b * m.m0 - c1 * m.m1;
}

}  // namespace fracops
