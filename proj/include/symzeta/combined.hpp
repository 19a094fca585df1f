#pragma once

// Composite functions built on the symmetrised zeta xi_1(s) = Gamma(s/2) zeta(s) pi^{-s/2}:
// the even/odd combinations T+ and T-, the quotients U, V, F1, the square
// lattice sum C(0,1;s), Macdonald sums and the artificially modified U/V used
// as counterexamples.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "symzeta/config.hpp"
#include "symzeta/special.hpp"

namespace symzeta {

enum class FuncId { TPlus, TMinus, U, V, F1, C01, ZetaShift, Xi1Shift };

inline std::string to_string(FuncId f) {
    switch (f) {
        case FuncId::TPlus: return "TPlus";
        case FuncId::TMinus: return "TMinus";
        case FuncId::U: return "U";
        case FuncId::V: return "V";
        case FuncId::F1: return "F1";
        case FuncId::C01: return "C01";
        case FuncId::ZetaShift: return "ZetaShift";
        case FuncId::Xi1Shift: return "Xi1Shift";
    }
    return "?";
}

inline FuncId parse_func_id(const std::string& name) {
    for (FuncId f : {FuncId::TPlus, FuncId::TMinus, FuncId::U, FuncId::V, FuncId::F1, FuncId::C01,
                     FuncId::ZetaShift, FuncId::Xi1Shift})
        if (to_string(f) == name) return f;
    throw DomainError("unknown function '" + name + "'");
}

/// One entry of a zeta-zero table, placed as a pole of U at s_p = sigma_p + i t_p.
struct ZetaZero {
    double t = 0;        // half the zeta ordinate
    double sigma = 0.25;
    int multiplicity = 1;
};

enum class ZeroSource { File, Computed };

/// Ordinates t_p (with sigma_p, m_p) of the poles of U(s). Immutable once built.
class ZetaZeroList {
public:
    ZetaZeroList() = default;
    ZetaZeroList(std::vector<ZetaZero> entries, ZeroSource source) : entries_(std::move(entries)), source_(source) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (!(e.sigma > 0.0 && e.sigma < 0.5)) throw DomainError("sigma_p must lie in (0, 1/2)");
            if (e.multiplicity < 1) throw DomainError("m_p must be >= 1");
            if (i > 0 && !(e.t > entries_[i - 1].t)) throw OrderError("zero ordinates must be strictly increasing");
        }
    }

    [[nodiscard]] const std::vector<ZetaZero>& entries() const { return entries_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] ZeroSource source() const { return source_; }
    /// 1-based access, matching the usual numbering of zeta zeros.
    [[nodiscard]] const ZetaZero& nth(int n) const {
        if (n < 1 || static_cast<std::size_t>(n) > entries_.size())
            throw IndexError("zero index " + std::to_string(n) + " outside list of " +
                             std::to_string(entries_.size()));
        return entries_[static_cast<std::size_t>(n - 1)];
    }

private:
    std::vector<ZetaZero> entries_;
    ZeroSource source_ = ZeroSource::Computed;
};

namespace detail {

// xi_1(s) = exp(log_prefactor) * zeta_value, with Re s < 0 reflected to 1 - s.
struct XiParts {
    Complex log_prefactor;
    Complex zeta_value;
};

inline XiParts xi1_parts(Complex s, const EvalConfig& cfg) {
    if (s.real() < 0.0) s = 1.0 - s;
    return {log_gamma(s / 2.0) - (s / 2.0) * std::log(pi), zeta(s, cfg)};
}

// U(s) = num / den with both parts scaled by the numerator's prefactor.
struct Quotient {
    Complex num;
    Complex den;
};

inline Quotient u_quotient(Complex s, const EvalConfig& cfg) {
    const XiParts top = xi1_parts(2.0 * s - 1.0, cfg);
    const XiParts bottom = xi1_parts(2.0 * s, cfg);
    return {top.zeta_value, bottom.zeta_value * std::exp(bottom.log_prefactor - top.log_prefactor)};
}

inline void check_denominator(Complex den, Complex num, const char* what) {
    if (!(std::abs(den) >= 1e-13 * (1.0 + std::abs(num)))) throw PoleError(what);
}

inline bool same_point(Complex s, double x) { return s == Complex(x, 0.0); }

}  // namespace detail

/// xi_1(s) = Gamma(s/2) zeta(s) / pi^{s/2}.
inline Complex xi1(Complex s, const EvalConfig& cfg = {}) {
    if (detail::same_point(s, 0.0) || detail::same_point(s, 1.0)) throw PoleError("xi_1 has poles at 0 and 1");
    if (s.real() < 0.0) s = 1.0 - s;
    Complex v = std::exp(log_gamma(s / 2.0) - (s / 2.0) * std::log(pi)) * zeta(s, cfg);
    if (s.imag() == 0.0) v.imag(0.0);
    return v;
}

namespace detail {

inline Complex t_combination(Complex s, double sign, const EvalConfig& cfg) {
    return (xi1(2.0 * s, cfg) + sign * xi1(2.0 * s - 1.0, cfg)) / 4.0;
}

}  // namespace detail

/// T+(s) = [xi_1(2s) + xi_1(2s-1)] / 4, even under s -> 1 - s.
inline Complex t_plus(Complex s, const EvalConfig& cfg = {}) {
    if (detail::same_point(s, 0.5)) {
        // finite limit of two cancelling poles
        constexpr double h = 1e-6;
        return 0.5 * (detail::t_combination(Complex(0.5 + h, 0.0), 1.0, cfg) +
                      detail::t_combination(Complex(0.5 - h, 0.0), 1.0, cfg));
    }
    return detail::t_combination(s, 1.0, cfg);
}

/// T-(s) = [xi_1(2s) - xi_1(2s-1)] / 4, odd under s -> 1 - s. The poles of
/// xi_1 at 2s = 1 and 2s - 1 = 0 add up, so T- has a simple pole at s = 1/2.
inline Complex t_minus(Complex s, const EvalConfig& cfg = {}) {
    if (detail::same_point(s, 0.5)) throw PoleError("T- has a simple pole at s = 1/2");
    return detail::t_combination(s, -1.0, cfg);
}

/// U(s) = xi_1(2s-1) / xi_1(2s). Satisfies U(s) U(1-s) = 1.
inline Complex u_fn(Complex s, const EvalConfig& cfg = {}) {
    if (detail::same_point(s, 0.0)) return 0.0;
    if (detail::same_point(s, 0.5)) return -1.0;
    if (detail::same_point(s, 1.0)) throw PoleError("U has a pole at s = 1");
    const auto q = detail::u_quotient(s, cfg);
    detail::check_denominator(q.den, q.num, "U has a pole here (xi_1(2s) = 0)");
    return q.num / q.den;
}

/// V(s) = T+(s) / T-(s) = (1 + U) / (1 - U).
inline Complex v_fn(Complex s, const EvalConfig& cfg = {}) {
    if (detail::same_point(s, 0.0)) return 1.0;
    if (detail::same_point(s, 0.5)) return 0.0;
    if (detail::same_point(s, 1.0)) return -1.0;
    const auto q = detail::u_quotient(s, cfg);
    const Complex top = q.den + q.num;
    const Complex bottom = q.den - q.num;
    detail::check_denominator(bottom, top, "V has a pole here (T- = 0)");
    return top / bottom;
}

/// F1(s) = (V - i) / (V + i) = i (U - i) / (U + i).
inline Complex f1_fn(Complex s, const EvalConfig& cfg = {}) {
    if (detail::same_point(s, 0.0)) return {0.0, -1.0};
    if (detail::same_point(s, 0.5)) return -1.0;
    if (detail::same_point(s, 1.0)) return {0.0, 1.0};
    const auto q = detail::u_quotient(s, cfg);
    const Complex top = q.num - detail::I * q.den;
    const Complex bottom = q.num + detail::I * q.den;
    detail::check_denominator(bottom, top, "F1 has a pole here (U = -i)");
    return detail::I * top / bottom;
}

namespace detail {

inline std::vector<int> totients(int n) {
    std::vector<int> phi(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) phi[static_cast<std::size_t>(i)] = i;
    for (int p = 2; p <= n; ++p)
        if (phi[static_cast<std::size_t>(p)] == p)
            for (int k = p; k <= n; k += p) phi[static_cast<std::size_t>(k)] -= phi[static_cast<std::size_t>(k)] / p;
    return phi;
}

}  // namespace detail

/// Large-|s| form of U in sigma > 1:
///   sqrt(pi/s) (1 + 3/(8s)) sum_{n <= n_terms} phi(n) n^{-2s},
/// the Dirichlet series being zeta(2s-1)/zeta(2s).
inline Complex u_asymptotic(Complex s, int n_zeta_terms) {
    if (!(s.real() > 1.0)) throw DomainError("u_asymptotic requires Re s > 1");
    if (n_zeta_terms < 1) throw DomainError("u_asymptotic needs at least one series term");
    const auto phi = detail::totients(n_zeta_terms);
    Complex series = 0.0;
    for (int n = 1; n <= n_zeta_terms; ++n)
        series += static_cast<double>(phi[static_cast<std::size_t>(n)]) * detail::pow_neg(n, 2.0 * s);
    return std::sqrt(pi / s) * (1.0 + 3.0 / (8.0 * s)) * series;
}

/// C(0,1;s) = sum over the square lattice of (p1^2 + p2^2)^{-s} = 4 zeta(s) L_{-4}(s).
inline Complex c01(Complex s, const EvalConfig& cfg = {}) {
    Complex v = 4.0 * zeta(s, cfg) * dirichlet_L4(s, cfg);
    if (s.imag() == 0.0) v.imag(0.0);
    return v;
}

struct MacdonaldSumSpec {
    int n = 0;
    int m = 0;
    int p_max = 8;
};

/// K(n,m;s) = sum_{p1,p2 >= 1} (p2/p1)^{s-1/2} (p1 p2 pi)^n K_{m+s-1/2}(2 pi p1 p2),
/// truncated at p1, p2 <= p_max. Throws ConvergenceError if the largest omitted
/// terms exceed 1e-14 of the partial sum.
inline Complex macdonald_sum(const MacdonaldSumSpec& spec, Complex s, const EvalConfig& cfg = {}) {
    if (spec.p_max < 2) throw DomainError("p_max must be >= 2");
    if (spec.n < 0 || spec.m < 0) throw DomainError("n and m must be non-negative");
    const Complex order = static_cast<double>(spec.m) + s - 0.5;
    const int pm = spec.p_max;
    std::vector<Complex> k_by_product(static_cast<std::size_t>(pm) * pm + pm + 2, Complex(0.0));
    std::vector<bool> have(k_by_product.size(), false);
    auto k_of = [&](int product) {
        const auto idx = static_cast<std::size_t>(product);
        if (!have[idx]) {
            k_by_product[idx] = bessel_k(order, 2.0 * pi * product, cfg);
            have[idx] = true;
        }
        return k_by_product[idx];
    };
    auto term = [&](int p1, int p2) {
        const double ratio = static_cast<double>(p2) / p1;
        return std::exp((s - 0.5) * std::log(ratio)) * std::pow(p1 * p2 * pi, spec.n) * k_of(p1 * p2);
    };
    Complex sum = 0.0;
    double largest = 0.0;
    for (int p1 = 1; p1 <= pm; ++p1)
        for (int p2 = 1; p2 <= pm; ++p2) {
            const Complex t = term(p1, p2);
            sum += t;
            largest = std::max(largest, std::abs(t));
        }
    const double omitted = std::abs(term(1, pm + 1)) + std::abs(term(pm + 1, 1));
    if (omitted > 1e-14 * std::max(std::abs(sum), largest))
        throw ConvergenceError("Macdonald sum not converged at p_max = " + std::to_string(pm));
    return sum;
}

/// Macdonald sum with p_max grown until the tail criterion holds.
inline Complex macdonald_sum_converged(int n, int m, Complex s, const EvalConfig& cfg = {}) {
    for (int p_max = 8; p_max <= 256; p_max *= 2) {
        try {
            return macdonald_sum({n, m, p_max}, s, cfg);
        } catch (const ConvergenceError&) {
        }
    }
    throw ConvergenceError("Macdonald sum did not converge by p_max = 256");
}

/// |K(0,0;s) - Gamma(s) C(0,1;s) / (8 pi^s) + T+(s)| / (1 + |T+(s)|).
inline double kober_identity_residual(Complex s, const EvalConfig& cfg = {}) {
    if (detail::same_point(s, 0.0) || detail::same_point(s, 0.5) || detail::same_point(s, 1.0))
        throw PoleError("Kober identity is singular at s = 0, 1/2, 1");
    const Complex k00 = macdonald_sum_converged(0, 0, s, cfg);
    const Complex lattice = std::exp(log_gamma(s) - s * std::log(pi)) * c01(s, cfg) / 8.0;
    const Complex tp = t_plus(s, cfg);
    return std::abs(k00 - lattice + tp) / (1.0 + std::abs(tp));
}

// ---------------------------------------------------------------------------
// Modified U/V: one zero/pole pair doubled, every pair doubled, or one pair
// split into two.

enum class ModifiedVariant { DoubleOne, DoubleAll, SplitPair };

struct ModifiedSpec {
    ModifiedVariant variant = ModifiedVariant::DoubleAll;
    int index_N = 98;
    double delta = 0.05;
};

inline Complex modified_u(const ModifiedSpec& spec, const ZetaZeroList& zeros, Complex s,
                          const EvalConfig& cfg = {}) {
    const Complex u = u_fn(s, cfg);
    if (spec.variant == ModifiedVariant::DoubleAll) return u * u;

    const double tn = zeros.nth(spec.index_N).t;
    auto factor = [&](Complex root) { return s - root; };
    Complex top = 1.0;
    Complex bottom = 1.0;
    if (spec.variant == ModifiedVariant::DoubleOne) {
        top = factor({0.75, tn}) * factor({0.75, -tn});
        bottom = factor({0.25, tn}) * factor({0.25, -tn});
    } else {
        const double d = spec.delta;
        if (!(d > 0.0 && d < 0.25)) throw DomainError("split offset must lie in (0, 1/4)");
        top = factor({0.75 - d, tn}) * factor({0.75 + d, tn}) * factor({0.25, tn});
        bottom = factor({0.25 - d, tn}) * factor({0.25 + d, tn}) * factor({0.75, tn});
    }
    if (std::abs(bottom) == 0.0) throw PoleError("modified U has an inserted pole here");
    return u * top / bottom;
}

inline Complex modified_v(const ModifiedSpec& spec, const ZetaZeroList& zeros, Complex s,
                          const EvalConfig& cfg = {}) {
    const Complex u = modified_u(spec, zeros, s, cfg);
    detail::check_denominator(1.0 - u, 1.0 + u, "modified V has a pole here");
    return (1.0 + u) / (1.0 - u);
}

/// Evaluates the function named by `f` at s. ZetaShift is zeta(2s - 1/2) and
/// Xi1Shift is xi_1(2s), whose value on the critical line is xi_1(1 + 2it).
inline Complex evaluate(FuncId f, Complex s, const EvalConfig& cfg = {}) {
    switch (f) {
        case FuncId::TPlus: return t_plus(s, cfg);
        case FuncId::TMinus: return t_minus(s, cfg);
        case FuncId::U: return u_fn(s, cfg);
        case FuncId::V: return v_fn(s, cfg);
        case FuncId::F1: return f1_fn(s, cfg);
        case FuncId::C01: return c01(s, cfg);
        case FuncId::ZetaShift: return zeta(2.0 * s - 0.5, cfg);
        case FuncId::Xi1Shift: return xi1(2.0 * s, cfg);
    }
    throw DomainError("unknown function");
}

}  // namespace symzeta
