#pragma once

// log|U(s)| as a logarithmic potential of the zeros and poles of U, with the
// truncated tail estimated from the density of zeta zeros.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <locale>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symzeta/combined.hpp"
#include "symzeta/config.hpp"
#include "symzeta/zeros.hpp"

namespace symzeta {

/// Reads zeta ordinates gamma_p (one per line, '#' comments) and stores the
/// poles of U at t_p = gamma_p / 2 with sigma_p = 1/4, m_p = 1.
inline ZetaZeroList load_zeta_zeros(std::istream& in) {
    std::vector<ZetaZero> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(line);
        if (line.empty() || line.front() == '#') continue;
        const double gamma_p = detail::parse_double(line, "zero ordinate on line " + std::to_string(lineno));
        if (!(gamma_p > 0.0)) throw ParseError("line " + std::to_string(lineno) + ": ordinate must be positive");
        if (!entries.empty() && !(gamma_p / 2.0 > entries.back().t))
            throw OrderError("line " + std::to_string(lineno) + ": ordinates must increase");
        entries.push_back({gamma_p / 2.0, 0.25, 1});
    }
    return {std::move(entries), ZeroSource::File};
}

inline ZetaZeroList load_zeta_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return load_zeta_zeros(in);
}

/// Poles of U with t_p <= t_max located by scanning xi_1(1/2 + 2it).
inline ZetaZeroList compute_zeta_zeros(double t_max, const EvalConfig& cfg = {}) {
    if (t_max > 1300.0) throw DomainError("compute_zeta_zeros supports t_max <= 1300");
    if (t_max <= 0.0) return {{}, ZeroSource::Computed};
    std::vector<ZetaZero> entries;
    for (const auto& z : scan(FuncId::ZetaShift, 0.0, t_max, 0.05, cfg)) entries.push_back({z.t_star, 0.25, 1});
    return {std::move(entries), ZeroSource::Computed};
}

namespace detail {

inline void require_count(const ZetaZeroList& zeros, int P) {
    if (P < 0 || static_cast<std::size_t>(P) > zeros.size())
        throw DomainError("requested " + std::to_string(P) + " zeros, list holds " + std::to_string(zeros.size()));
}

// -Re log((s - c) / (s - 1/2 - c)) for the pole c = sigma_p + i tp, written
// as a log1p of the modulus difference so it vanishes exactly on the line
// when sigma_p = 1/4.
inline double pair_term(Complex s, double sigma_p, double tp) {
    const double x = s.real() - sigma_p;
    const double y = s.imag() - tp;
    const double below = (x - 0.5) * (x - 0.5) + y * y;
    const double above = x * x + y * y;
    if (below == 0.0 || above == 0.0) throw PoleError("expansion evaluated at a zero or pole of U");
    return -0.5 * std::log1p((x - 0.25) / below);
}

inline double exceptional_term(Complex s) {
    const double a = std::norm(s);
    if (a == 0.0 || s == Complex(1.0, 0.0)) throw PoleError("expansion evaluated at s = 0 or s = 1");
    // -Re log((s - 1)/s) = -1/2 log(|s - 1|^2 / |s|^2)
    return -0.5 * std::log1p((1.0 - 2.0 * s.real()) / a);
}

}  // namespace detail

/// log|U(s)| from the zero at 0, the pole at 1, and the first P conjugate
/// pole/zero pairs (s_p, s_p + 1/2), (conj s_p, conj s_p + 1/2).
inline double log_abs_u_expansion(Complex s, const ZetaZeroList& zeros, int P) {
    detail::require_count(zeros, P);
    double sum = detail::exceptional_term(s);
    for (int p = 0; p < P; ++p) {
        const auto& z = zeros.entries()[static_cast<std::size_t>(p)];
        sum += z.multiplicity * (detail::pair_term(s, z.sigma, z.t) + detail::pair_term(s, z.sigma, -z.t));
    }
    return sum;
}

struct EMConfig {
    int L = 1000;  // direct-sum cutoff
    int q = 0;     // Bernoulli order

    void validate() const {
        if (L < 10) throw DomainError("EMConfig.L must be >= 10");
        if (q < 0 || q > 6) throw DomainError("EMConfig.q must lie in [0, 6]");
    }
};

/// Integral of the leading tail term (1 - 2 sigma)/(2 t_p^2) against the
/// zero density log(t_p/pi)/pi from L + 1 to infinity.
inline double em_tail(double sigma, int L) {
    if (L < 10) throw DomainError("em_tail requires L >= 10");
    const double a = L + 1.0;
    return (1.0 - 2.0 * sigma) / (2.0 * a * pi) * (1.0 + std::log(a / pi));
}

namespace detail {

// Ordinate reached x index steps past the tail start a, from
// dx/dtau = log(tau/pi)/pi, by Newton on the integrated counting function.
inline double tail_ordinate(double a, double x) {
    auto count = [a](double tau) {
        auto g = [](double u) { return u * (std::log(u / pi) - 1.0) / pi; };
        return g(tau) - g(a);
    };
    double tau = a + x * pi / std::log(a / pi);
    for (int it = 0; it < 50; ++it) {
        const double step = (count(tau) - x) / (std::log(tau / pi) / pi);
        tau -= step;
        if (std::abs(step) < 1e-13 * tau) break;
    }
    return tau;
}

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// Expansion truncated at L plus the Euler-Maclaurin estimate of the rest:
/// the density integral, the boundary term -B_1 f(0) and, for q > 0, the
/// odd-derivative corrections of the tail summand f(x) = T(t_{L+1+x}),
/// taken by central differences.
inline double expansion_with_tail(Complex s, const ZetaZeroList& zeros, const EMConfig& em) {
    em.validate();
    double value = log_abs_u_expansion(s, zeros, em.L) + em_tail(s.real(), em.L);
    const double a = em.L + 1.0;
    auto f = [&](double x) {
        const double tau = detail::tail_ordinate(a, x);
        return detail::pair_term(s, 0.25, tau) + detail::pair_term(s, 0.25, -tau);
    };
    value += 0.5 * f(0.0);  // -B_1 f(0)
    const auto& b = detail::bernoulli_over_factorial();
    const double h = a / 16.0;
    for (int k = 1; k <= em.q; ++k) {
        const int n = 2 * k - 1;
        double d = 0.0;
        for (int j = 0; j <= n; ++j) d += ((j % 2) ? -1.0 : 1.0) * detail::binomial(n, j) * f((n / 2.0 - j) * h);
        value -= b[static_cast<std::size_t>(k - 1)] * d / std::pow(h, n);
    }
    return value;
}

/// d/dsigma log|U| on the critical line from the first P pairs.
inline double sigma_derivative_on_line(double t, const ZetaZeroList& zeros, int P) {
    if (t < 0.0) throw DomainError("sigma_derivative_on_line requires t >= 0");
    detail::require_count(zeros, P);
    double sum = 1.0 / (t * t + 0.25);
    for (int p = 0; p < P; ++p) {
        const auto& z = zeros.entries()[static_cast<std::size_t>(p)];
        const double sp = z.sigma;
        const double tp = z.t;
        const double c = (1.0 - 2.0 * sp) * (1.0 - 2.0 * sp);
        const double num = 8.0 * (2.0 * sp - 1.0) * (4.0 * t * t + 4.0 * tp * tp + 4.0 * sp * (sp - 1.0) + 1.0);
        const double den = (c + 4.0 * (t - tp) * (t - tp)) * (c + 4.0 * (t + tp) * (t + tp));
        sum += z.multiplicity * num / den;
    }
    return sum;
}

/// As above plus the density estimate of the omitted pairs,
/// -(1 + log(T/pi)) / (pi T) with T = t_P.
inline double sigma_derivative_with_tail(double t, const ZetaZeroList& zeros, int P) {
    const double base = sigma_derivative_on_line(t, zeros, P);
    if (P == 0) return base;
    const double T = zeros.nth(P).t;
    return base - (1.0 + std::log(T / pi)) / (pi * T);
}

/// Root of the derivative in (lo, hi), by bisection on the tail-corrected sum.
inline double sigma_derivative_root(const ZetaZeroList& zeros, int P, double lo, double hi) {
    double f_lo = sigma_derivative_with_tail(lo, zeros, P);
    const double f_hi = sigma_derivative_with_tail(hi, zeros, P);
    if ((f_lo < 0) == (f_hi < 0)) throw DomainError("derivative does not change sign on the interval");
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = sigma_derivative_with_tail(mid, zeros, P);
        if ((fm < 0) == (f_lo < 0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Height below which the first pole pair alone cannot outweigh the
/// exceptional zero/pole at 0 and 1.
inline double first_pole_threshold(double t1, double sigma) {
    const double radicand = t1 * t1 - 3.0 / 16.0 + (sigma - 0.5) * (sigma - 0.5);
    if (radicand < 0.0) throw DomainError("first_pole_threshold: negative radicand");
    return std::sqrt(radicand) / std::sqrt(3.0);
}

struct SignSample {
    double sigma = 0;
    double t = 0;
    double log_abs_u = 0;
};

struct SignCheckSpec {
    int samples = 500;
    std::uint64_t seed = 20250101;
    double t_min = 3.0;
    double t_max = 300.0;
};

struct SignReport {
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<SignSample> violations;
    std::vector<SignSample> exceptional;  // violations below t = 2.94334, informational
};

/// Samples log|U| at random points on either side of the critical line:
/// expected negative for sigma in (1/2, 3) and positive for sigma in (-2, 1/2).
inline SignReport half_plane_sign_check(const SignCheckSpec& spec, const EvalConfig& cfg = {}) {
    if (spec.samples < 1) throw DomainError("half_plane_sign_check needs at least one sample");
    if (!(spec.t_min > 0.0 && spec.t_min < spec.t_max)) throw DomainError("invalid t range");
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> right(0.5, 3.0), left(-2.0, 0.5), height(spec.t_min, spec.t_max);
    SignReport report;
    report.samples = spec.samples;
    report.seed = spec.seed;
    for (int i = 0; i < spec.samples; ++i) {
        const bool is_right = i % 2 == 0;
        double sigma = is_right ? right(rng) : left(rng);
        const double t = height(rng);
        if (std::abs(sigma - 0.5) < 1e-9) sigma = is_right ? 0.5 + 1e-9 : 0.5 - 1e-9;
        const double v = std::log(std::abs(u_fn(Complex(sigma, t), cfg)));
        const bool ok = is_right ? v < 0.0 : v > 0.0;
        if (ok) continue;
        SignSample bad{sigma, t, v};
        (t > 2.94334 ? report.violations : report.exceptional).push_back(bad);
    }
    return report;
}

/// Throws SignViolation on the first violation above the exceptional region.
inline SignReport require_half_plane_sign(const SignCheckSpec& spec, const EvalConfig& cfg = {}) {
    auto r = half_plane_sign_check(spec, cfg);
    if (!r.violations.empty()) {
        const auto& v = r.violations.front();
        std::ostringstream os;
        os << "log|U| has the wrong sign at " << v.sigma << " + " << v.t << "i (value " << v.log_abs_u << ")";
        throw SignViolation(os.str());
    }
    return r;
}

struct ExpansionRow {
    double t = 0;
    double expansion = 0;
    double direct = 0;
    double abs_err = 0;
};

/// expansion_with_tail against log|u_fn| along sigma = const on n points of [t_min, t_max].
inline std::vector<ExpansionRow> expansion_profile(double sigma, double t_min, double t_max, int n,
                                                   const ZetaZeroList& zeros, const EMConfig& em,
                                                   const EvalConfig& cfg = {}) {
    if (n < 2) throw DomainError("expansion_profile needs n >= 2");
    std::vector<ExpansionRow> rows(static_cast<std::size_t>(n));
    detail::parallel_for(rows.size(), [&](std::size_t k) {
        const double t = t_min + (t_max - t_min) * static_cast<double>(k) / (n - 1);
        const Complex s(sigma, t);
        auto& r = rows[k];
        r.t = t;
        r.expansion = expansion_with_tail(s, zeros, em);
        r.direct = std::log(std::abs(u_fn(s, cfg)));
        r.abs_err = std::abs(r.expansion - r.direct);
    });
    return rows;
}

/// CSV `t,expansion,direct,abs_err`.
inline void write_expansion_csv(std::ostream& out, const std::vector<ExpansionRow>& rows) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "t,expansion,direct,abs_err\n" << std::setprecision(12);
    for (const auto& r : rows) os << r.t << ',' << r.expansion << ',' << r.direct << ',' << r.abs_err << '\n';
    out << os.str();
}

}  // namespace symzeta
