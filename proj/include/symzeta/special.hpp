#pragma once

// Complex-argument special functions: log-gamma, gamma, Riemann and Hurwitz
// zeta, the Dirichlet L-function for the character mod 4, and the Macdonald
// function K_nu(z) of complex order.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "symzeta/config.hpp"

namespace symzeta {

namespace detail {

inline constexpr Complex I{0.0, 1.0};

// B_{2k} for k = 1..12.
inline constexpr std::array<double, 12> bernoulli_even = {
    1.0 / 6.0,          -1.0 / 30.0,       1.0 / 42.0,         -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,   7.0 / 6.0,          -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0, 854513.0 / 138.0,   -236364091.0 / 2730.0};

// B_{2k} / (2k)!
inline const std::array<double, 12>& bernoulli_over_factorial() {
    static const std::array<double, 12> table = [] {
        std::array<double, 12> t{};
        double fact = 1.0;
        for (int k = 1; k <= 12; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            t[k - 1] = bernoulli_even[k - 1] / fact;
        }
        return t;
    }();
    return table;
}

inline bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

/// log(sin(pi z)) on some branch, stable for large |Im z|.
inline Complex log_sin_pi(Complex z) {
    const double y = z.imag();
    if (std::abs(y) < 8.0) return std::log(std::sin(pi * z));
    if (y > 0) return -I * pi * z + std::log((std::exp(2.0 * I * pi * z) - 1.0) / (2.0 * I));
    return I * pi * z + std::log((1.0 - std::exp(-2.0 * I * pi * z)) / (2.0 * I));
}

/// x^{-s} for x > 0.
inline Complex pow_neg(double x, Complex s) {
    const double lx = std::log(x);
    return std::polar(std::exp(-s.real() * lx), -s.imag() * lx);
}

/// (exp(w d) - 1) / w, continuous through w = 0.
inline Complex expm1_over(Complex w, double d) {
    const Complex x = w * d;
    if (std::abs(x) < 1e-3)
        return d * (1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0 + x * x * x * x / 120.0);
    return (std::exp(x) - 1.0) / w;
}

inline int em_length(Complex s, const EvalConfig& cfg) {
    return std::max(cfg.zeta_em_terms, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))));
}

/// Euler-Maclaurin tail corrections at x = N + a:
/// sum_k B_{2k}/(2k)! (s)(s+1)...(s+2k-2) x^{-s-2k+1}.
inline Complex em_corrections(Complex s, double x, int order) {
    const auto& c = bernoulli_over_factorial();
    Complex rising = s;  // (s)_{2k-1}
    Complex xpow = pow_neg(x, s + 1.0);
    Complex sum = 0.0;
    const double inv_x2 = 1.0 / (x * x);
    for (int k = 1; k <= order; ++k) {
        sum += c[k - 1] * rising * xpow;
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        xpow *= inv_x2;
    }
    return sum;
}

}  // namespace detail

/// Principal log-gamma: continuous in the right half-plane and matching the
/// Stirling branch there. Left half-plane values come from reflection and are
/// only defined modulo 2 pi i.
inline Complex log_gamma(Complex z) {
    if (detail::is_nonpositive_integer(z)) throw PoleError("gamma has a pole at a non-positive integer");
    if (z.real() < 0.5)
        return std::log(pi) - detail::log_sin_pi(z) - log_gamma(1.0 - z);

    Complex shift = 0.0;
    while (std::abs(z) < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    // Stirling: B_{2k} / (2k (2k-1) z^{2k-1}), k = 1..10.
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex p = inv;
    for (int k = 1; k <= 10; ++k) {
        series += detail::bernoulli_even[k - 1] / ((2.0 * k) * (2.0 * k - 1.0)) * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series - shift;
}

inline Complex gamma(Complex z) {
    Complex g = std::exp(log_gamma(z));
    if (z.imag() == 0.0) g.imag(0.0);
    return g;
}

/// Riemann zeta by Euler-Maclaurin summation on Re s >= 0 and the functional
/// equation on Re s < 0.
inline Complex zeta(Complex s, const EvalConfig& cfg = {}) {
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
    if (s.real() < 0.0) {
        if (s.imag() == 0.0 && std::fmod(s.real(), 2.0) == 0.0) return 0.0;
        const Complex logf = s * std::log(2.0) + (s - 1.0) * std::log(pi) +
                             detail::log_sin_pi(s / 2.0) + log_gamma(1.0 - s);
        Complex z = std::exp(logf) * zeta(1.0 - s, cfg);
        if (s.imag() == 0.0) z.imag(0.0);
        return z;
    }
    const int n = detail::em_length(s, cfg);
    Complex sum = 0.0;
    for (int k = 1; k < n; ++k) sum += detail::pow_neg(k, s);
    const double x = n;
    const Complex xs = detail::pow_neg(x, s);
    sum += x * xs / (s - 1.0) + 0.5 * xs;
    sum += detail::em_corrections(s, x, cfg.zeta_em_order);
    return sum;
}

/// Hurwitz zeta(s, a) for a in (0, 1] by Euler-Maclaurin summation. Accuracy
/// degrades for strongly negative Re s, where the direct terms grow.
inline Complex hurwitz_zeta(Complex s, double a, const EvalConfig& cfg = {}) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta requires a in (0, 1]");
    if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta has a pole at s = 1");
    const int n = detail::em_length(s, cfg);
    Complex sum = 0.0;
    for (int k = 0; k < n; ++k) sum += detail::pow_neg(k + a, s);
    const double x = n + a;
    const Complex xs = detail::pow_neg(x, s);
    sum += x * xs / (s - 1.0) + 0.5 * xs;
    sum += detail::em_corrections(s, x, cfg.zeta_em_order);
    return sum;
}

/// L_{-4}(s) = 4^{-s} [zeta(s, 1/4) - zeta(s, 3/4)]. The two Hurwitz series are
/// differenced term by term so the common pole at s = 1 cancels exactly.
inline Complex dirichlet_L4(Complex s, const EvalConfig& cfg = {}) {
    if (s.real() < 0.0) {
        // L(s) = (4/pi)^{1/2 - s} Gamma(1 - s/2) / Gamma((1 + s)/2) L(1 - s)
        if (detail::is_nonpositive_integer((1.0 + s) / 2.0)) return 0.0;
        const Complex logf = (0.5 - s) * std::log(4.0 / pi) + log_gamma(1.0 - s / 2.0) -
                             log_gamma((1.0 + s) / 2.0);
        Complex v = std::exp(logf) * dirichlet_L4(1.0 - s, cfg);
        if (s.imag() == 0.0) v.imag(0.0);
        return v;
    }
    const int n = detail::em_length(s, cfg);
    Complex sum = 0.0;
    for (int k = 0; k < n; ++k) sum += detail::pow_neg(k + 0.25, s) - detail::pow_neg(k + 0.75, s);
    const double xa = n + 0.25;
    const double xb = n + 0.75;
    const Complex w = 1.0 - s;
    // [xa^{1-s} - xb^{1-s}] / (s - 1)
    sum += -std::exp(w * std::log(xb)) * detail::expm1_over(w, std::log(xa) - std::log(xb));
    sum += 0.5 * (detail::pow_neg(xa, s) - detail::pow_neg(xb, s));
    sum += detail::em_corrections(s, xa, cfg.zeta_em_order) -
           detail::em_corrections(s, xb, cfg.zeta_em_order);
    Complex v = std::exp(-s * std::log(4.0)) * sum;
    if (s.imag() == 0.0) v.imag(0.0);
    return v;
}

/// Macdonald function K_nu(z) for complex order and real z > 0, from
///   K_nu(z) = 1/2 int_{-inf}^{inf} exp(-z cosh u + nu u) du
/// evaluated by the trapezoid rule on the horizontal contour Im u = alpha.
/// alpha sits at the saddle point when |Im nu| < z, which removes the
/// cancellation that large imaginary orders cause on the real axis.
inline Complex bessel_k(Complex nu, double z, const EvalConfig& cfg = {}) {
    if (!(z > 0.0)) throw DomainError("bessel_k requires z > 0");
    if (nu.real() < 0.0) nu = -nu;  // K_{-nu} = K_nu
    const double a = nu.real();
    const double b = nu.imag();
    constexpr double edge = 0.1;

    double alpha = std::min(std::asin(std::min(std::abs(b) / z, 1.0)), pi / 2 - edge);
    if (b < 0) alpha = -alpha;
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);

    // |integrand| = exp(-z ca cosh x + a x) up to the constant prefactor.
    auto log_mag = [&](double x) { return -z * ca * std::cosh(x) + a * x; };
    const double x_peak = std::asinh(a / (z * ca));
    const double peak = log_mag(x_peak);
    const double cancel = std::max(0.0, std::abs(b) * (pi / 2 - std::abs(alpha)) - z * ca);
    const double margin = 46.0 + cancel;
    double upper = x_peak;
    while (log_mag(upper) > peak - margin && upper < cfg.quad_upper) upper += 0.05;
    upper = std::min(upper, cfg.quad_upper);

    auto integrand = [&](double x) {
        const double re = -z * ca * std::cosh(x) + a * x;
        const double im = -z * sa * std::sinh(x) + b * x;
        return std::polar(std::exp(re - peak), im);
    };

    int n = std::max(2, static_cast<int>(std::ceil(upper / cfg.quad_step)));
    double h = upper / n;
    Complex sum = integrand(0.0);
    double abs_sum = std::abs(sum);
    for (int j = 1; j <= n; ++j) {
        const Complex f = integrand(j * h) + integrand(-j * h);
        sum += f;
        abs_sum += std::abs(integrand(j * h)) + std::abs(integrand(-j * h));
    }
    Complex estimate = sum * h;
    for (int level = 0; level < 16; ++level) {
        Complex odd = 0.0;
        for (int j = 0; j < n; ++j) {
            const double x = (j + 0.5) * h;
            const Complex fp = integrand(x);
            const Complex fm = integrand(-x);
            odd += fp + fm;
            abs_sum += std::abs(fp) + std::abs(fm);
        }
        sum += odd;
        n *= 2;
        h /= 2;
        const Complex refined = sum * h;
        const double change = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 1 && (change <= 1e-13 * std::abs(refined) || change <= 1e-16 * abs_sum * h))
            break;
    }
    // prefactor 1/2 exp(i nu alpha) exp(peak)
    return 0.5 * std::exp(detail::I * nu * alpha + peak) * estimate;
}

}  // namespace symzeta
