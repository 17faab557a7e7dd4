#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace fracops {

/// Validated fractional order alpha in (0, 1].
class FractionalOrder {
public:
    /// Throws OrderError unless 0 < alpha <= 1.
    explicit FractionalOrder(double alpha);

    double alpha() const noexcept { return alpha_; }

    /// Kernel frequency alpha / (1 - alpha). Throws OrderError at alpha = 1.
    double lambda() const;

private:
    double alpha_;
};

enum class KernelKind { C, CF, AB, DS, DC };

inline constexpr std::array<KernelKind, 5> kAllKernelKinds = {
    KernelKind::C, KernelKind::CF, KernelKind::AB, KernelKind::DS, KernelKind::DC};

/// Lower-case short name: "c", "cf", "ab", "ds", "dc".
std::string_view to_string(KernelKind kind) noexcept;
std::optional<KernelKind> parse_kernel_kind(std::string_view name) noexcept;

/// True for the kinds whose kernel depends on lambda = alpha / (1 - alpha).
constexpr bool uses_lambda(KernelKind kind) noexcept { return kind != KernelKind::C; }

/// Operator = kernel kind + order + normalization constant.
///
/// The normalization is N(alpha) for DS/DC and B(alpha) for CF/AB; Caputo
/// ignores it and uses 1/Gamma(1 - alpha).
struct OperatorSpec {
    KernelKind kind;
    FractionalOrder order;
    double normalization = 1.0;

    /// Throws std::invalid_argument for a non-positive normalization and
    /// OrderError for alpha = 1 with a lambda-based kernel.
    void validate() const;

    /// Constant multiplying the convolution integral.
    double prefactor() const;
};

/// Kernel k(t): t^-alpha (C), exp(-lambda t) (CF), E_alpha(-lambda t^alpha) (AB),
/// sin(lambda t) (DS), cos(lambda t) (DC).
///
/// Throws std::domain_error for t < 0 or for t = 0 with the Caputo kernel, and
/// OrderError for alpha = 1 with a lambda-based kernel.
double kernel_eval(KernelKind kind, const FractionalOrder& order, double t);

/// Integral over tau in [a, b] of k(t - tau) * (c0 + c1 tau).
///
/// Requires 0 <= a < b <= t (IntervalError otherwise). Exact for the C, CF, DS
/// and DC kernels; the AB kernel uses 8-point Gauss-Legendre on the segment.
/// The Caputo singularity at tau = t is integrated analytically.
double kernel_segment_integral(KernelKind kind, const FractionalOrder& order, double t, double a,
                               double b, double c0, double c1);

/// 8-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre8 {
    static constexpr std::array<double, 8> nodes = {
        -0.9602898564975362316835609, -0.7966664774136267395915539, -0.5255324099163289858177390,
        -0.1834346424956498049394761, 0.1834346424956498049394761,  0.5255324099163289858177390,
        0.7966664774136267395915539,  0.9602898564975362316835609};
    static constexpr std::array<double, 8> weights = {
        0.1012285362903762591525314, 0.2223810344533744705443560, 0.3137066458778872873379622,
        0.3626837833783619829651504, 0.3626837833783619829651504, 0.3137066458778872873379622,
        0.2223810344533744705443560, 0.1012285362903762591525314};
};

}  // namespace fracops
