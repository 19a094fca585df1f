#pragma once

// Critical-line zero location. Every function of interest is reduced to a
// real-valued detector ("surrogate") on s = 1/2 + it whose sign changes mark
// its zeros; the detectors are rescaled by positive gamma-modulus factors so
// they stay representable at large t.

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <locale>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "symzeta/combined.hpp"
#include "symzeta/config.hpp"
#include "symzeta/special.hpp"

namespace symzeta {

struct ZeroRecord {
    FuncId func = FuncId::TMinus;
    int index = 0;  // 1-based, ordered by t
    double t_lo = 0;
    double t_hi = 0;
    double t_star = 0;
    double residual = 0;
};

using ZeroList = std::vector<ZeroRecord>;

namespace detail {

// xi_1(1 + 2it) divided by |Gamma(1/2 + it)| pi^{-1/2}.
inline Complex xi_line_scaled(double t, const EvalConfig& cfg) {
    const double phase = log_gamma(Complex(0.5, t)).imag() - t * std::log(pi);
    return std::polar(1.0, phase) * zeta(Complex(1.0, 2.0 * t), cfg);
}

// xi_1(1/2 + it) up to a positive factor; real.
inline double xi_half_scaled(double t, const EvalConfig& cfg) {
    const double phase = log_gamma(Complex(0.25, t / 2.0)).imag() - (t / 2.0) * std::log(pi);
    return (std::polar(1.0, phase) * zeta(Complex(0.5, t), cfg)).real();
}

// Completed L_{-4}(1/2 + it), (4/pi)^{(s+1)/2} Gamma((s+1)/2) L_{-4}(s), up to a positive factor; real.
inline double lambda4_half_scaled(double t, const EvalConfig& cfg) {
    const double phase = log_gamma(Complex(0.75, t / 2.0)).imag() + (t / 2.0) * std::log(4.0 / pi);
    return (std::polar(1.0, phase) * dirichlet_L4(Complex(0.5, t), cfg)).real();
}

// Sign-change detectors whose zero sets partition the zeros of a function.
// C(0,1;s) is scanned factor by factor so that a zeta zero and an L zero
// lying within one grid step of each other are not lost.
inline std::vector<std::function<double(double)>> detectors(FuncId f, const EvalConfig& cfg) {
    switch (f) {
        case FuncId::TPlus:
        case FuncId::V:
            return {[cfg](double t) { return xi_line_scaled(t, cfg).real(); }};
        case FuncId::TMinus:
            return {[cfg](double t) { return xi_line_scaled(t, cfg).imag(); }};
        case FuncId::F1:
            return {[cfg](double t) { return (xi_line_scaled(t, cfg) * std::polar(1.0, pi / 4)).imag(); }};
        case FuncId::ZetaShift:
            return {[cfg](double t) { return xi_half_scaled(2.0 * t, cfg); }};
        case FuncId::C01:
            return {[cfg](double t) { return xi_half_scaled(t, cfg); },
                    [cfg](double t) { return lambda4_half_scaled(t, cfg); }};
        case FuncId::U:
        case FuncId::Xi1Shift:
            break;
    }
    throw DomainError(to_string(f) + " has no critical-line zero detector");
}

}  // namespace detail

/// Real-valued detector on s = 1/2 + it whose sign changes are the zeros of f:
/// Re xi_1(1+2it) for T+ (and V), Im xi_1(1+2it) for T-, xi_1(1/2+2it) for
/// zeta(2s-1/2) and the product of xi_1(1/2+it) with the completed L_{-4} for
/// C(0,1;s). Values carry a positive t-dependent scale.
inline double surrogate(FuncId f, double t, const EvalConfig& cfg = {}) {
    if (t < 0) throw DomainError("surrogate requires t >= 0");
    const auto parts = detail::detectors(f, cfg);
    double v = 1.0;
    for (const auto& d : parts) v *= d(t);
    return v;
}

namespace detail {

inline double start_point(double t_min, double step) { return t_min > 0.0 ? t_min : 1e-3 * step; }

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

struct Bracket {
    double lo, hi, f_lo, f_hi;
};

// Bisection to tol, at most 60 halvings. Returns (t_lo, t_hi, |f(t_star)|).
inline ZeroRecord bisect(const std::function<double(double)>& f, Bracket b, double tol) {
    for (int it = 0; it < 60 && b.hi - b.lo > 2.0 * tol; ++it) {
        const double mid = 0.5 * (b.lo + b.hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            b = {mid, mid, 0.0, 0.0};
            break;
        }
        if ((fm < 0) == (b.f_lo < 0)) {
            b.lo = mid;
            b.f_lo = fm;
        } else {
            b.hi = mid;
            b.f_hi = fm;
        }
    }
    ZeroRecord r;
    r.t_star = 0.5 * (b.lo + b.hi);
    r.t_lo = b.lo;
    r.t_hi = b.hi;
    r.residual = std::abs(f(r.t_star));
    return r;
}

// Sign changes on a sampled grid, with recursive subdivision where |f| dips
// towards zero without changing sign (a possibly hidden close pair).
inline void collect_brackets(const std::function<double(double)>& f, const std::vector<double>& t,
                             const std::vector<double>& v, int depth, std::vector<Bracket>& out) {
    const std::size_t n = t.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if ((v[k] < 0) != (v[k + 1] < 0)) {
            out.push_back({t[k], t[k + 1], v[k], v[k + 1]});
            continue;
        }
        if (depth >= 3 || k == 0 || k + 1 >= n) continue;
        const bool dip = (v[k - 1] < 0) == (v[k] < 0) && std::abs(v[k]) < std::abs(v[k - 1]) &&
                         std::abs(v[k]) < std::abs(v[k + 1]);
        if (!dip) continue;
        // refine both neighbouring intervals
        constexpr int sub = 16;
        for (std::size_t j : {k - 1, k}) {
            std::vector<double> ts(sub + 1), vs(sub + 1);
            for (int i = 0; i <= sub; ++i) {
                ts[static_cast<std::size_t>(i)] = t[j] + (t[j + 1] - t[j]) * i / sub;
                vs[static_cast<std::size_t>(i)] = i == 0 ? v[j] : (i == sub ? v[j + 1] : f(ts[static_cast<std::size_t>(i)]));
            }
            std::vector<Bracket> inner;
            collect_brackets(f, ts, vs, depth + 1, inner);
            out.insert(out.end(), inner.begin(), inner.end());
        }
    }
}

inline std::vector<ZeroRecord> scan_detector(const std::function<double(double)>& f, double t_min, double t_max,
                                             double step, double tol) {
    const auto count = static_cast<std::size_t>(std::ceil((t_max - t_min) / step - 1e-9));
    std::vector<double> t(count + 1), v(count + 1);
    for (std::size_t k = 0; k <= count; ++k) t[k] = k == count ? t_max : t_min + static_cast<double>(k) * step;
    t[0] = start_point(t_min, step);
    parallel_for(t.size(), [&](std::size_t k) { v[k] = f(t[k]); });

    std::vector<Bracket> brackets;
    collect_brackets(f, t, v, 0, brackets);
    std::sort(brackets.begin(), brackets.end(), [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
    // drop duplicates produced by overlapping refinement windows
    std::vector<Bracket> unique;
    for (const auto& b : brackets)
        if (unique.empty() || b.lo >= unique.back().hi) unique.push_back(b);

    std::vector<ZeroRecord> out(unique.size());
    parallel_for(unique.size(), [&](std::size_t i) { out[i] = bisect(f, unique[i], tol); });
    return out;
}

}  // namespace detail

/// Locates every sign change of the surrogate on the grid t_min + k step
/// (0 <= t_min < t_max), refined by bisection to cfg.bisect_tol.
inline ZeroList scan(FuncId func, double t_min, double t_max, double step, const EvalConfig& cfg = {}) {
    if (!(t_min >= 0.0 && t_min < t_max)) throw DomainError("scan requires 0 <= t_min < t_max");
    if (!(step > 0.0)) throw DomainError("scan requires step > 0");
    ZeroList all;
    for (const auto& d : detail::detectors(func, cfg)) {
        auto part = detail::scan_detector(d, t_min, t_max, step, cfg.bisect_tol);
        for (auto& r : part) {
            r.func = func;
            r.residual = std::abs(surrogate(func, r.t_star, cfg));
        }
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end(), [](const ZeroRecord& a, const ZeroRecord& b) { return a.t_star < b.t_star; });
    for (std::size_t i = 0; i < all.size(); ++i) all[i].index = static_cast<int>(i) + 1;
    return all;
}

struct CountTable {
    std::vector<std::pair<double, double>> intervals;
    std::map<FuncId, std::vector<int>> counts;
    std::map<FuncId, ZeroList> zeros;
};

/// Counts zeros per interval (t_lo, t_hi] for each function.
inline CountTable count_table(const std::vector<FuncId>& funcs, const std::vector<std::pair<double, double>>& intervals,
                              double step = 0.05, const EvalConfig& cfg = {}) {
    if (intervals.empty()) throw DomainError("count_table needs at least one interval");
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (!(intervals[i].first < intervals[i].second)) throw DomainError("intervals must be nonempty");
        if (i > 0 && intervals[i].first != intervals[i - 1].second)
            throw DomainError("intervals must be ordered and contiguous");
    }
    CountTable table;
    table.intervals = intervals;
    for (FuncId f : funcs) {
        ZeroList zs = scan(f, intervals.front().first, intervals.back().second, step, cfg);
        std::vector<int> c(intervals.size(), 0);
        for (const auto& z : zs)
            for (std::size_t i = 0; i < intervals.size(); ++i)
                if (z.t_star > intervals[i].first && z.t_star <= intervals[i].second) {
                    ++c[i];
                    break;
                }
        table.counts[f] = std::move(c);
        table.zeros[f] = std::move(zs);
    }
    return table;
}

/// Equal-width contiguous intervals covering (t_min, t_max].
inline std::vector<std::pair<double, double>> uniform_intervals(double t_min, double t_max, double width) {
    std::vector<std::pair<double, double>> out;
    const int n = static_cast<int>(std::round((t_max - t_min) / width));
    for (int i = 0; i < n; ++i) out.emplace_back(t_min + i * width, i + 1 == n ? t_max : t_min + (i + 1) * width);
    return out;
}

enum class AsymptoticBranch { ZetaOf2t, C01 };

/// Leading terms of the zero-counting functions: N_zeta(1/2, 2t) from the zeta
/// formula with t -> 2t, or the lattice-sum formula (t/pi) log t - (t/pi)(1 + log pi).
inline double count_asymptotic(double t, AsymptoticBranch which) {
    if (!(t > std::exp(1.0))) throw DomainError("count_asymptotic requires t > e");
    if (which == AsymptoticBranch::ZetaOf2t) {
        const double T = 2.0 * t;
        return T / (2.0 * pi) * std::log(T) - T / (2.0 * pi) * (1.0 + std::log(2.0 * pi));
    }
    return t / pi * std::log(t) - t / pi * (1.0 + std::log(pi));
}

// ---------------------------------------------------------------------------
// Phase of xi_1(1 + 2it) and the event ordering it implies.

/// arg xi_1(1 + 2it): continuous gamma phase plus the principal argument of
/// zeta(1 + 2it). Unwrap along a grid for a continuous branch.
inline double theta(double t, const EvalConfig& cfg = {}) {
    return log_gamma(Complex(0.5, t)).imag() - t * std::log(pi) + std::arg(zeta(Complex(1.0, 2.0 * t), cfg));
}

struct ThetaSamples {
    std::vector<double> t;
    std::vector<double> theta;  // unwrapped
};

inline ThetaSamples theta_unwrapped(double t_min, double t_max, double step, const EvalConfig& cfg = {}) {
    if (!(t_min < t_max) || !(step > 0)) throw DomainError("theta_unwrapped requires t_min < t_max and step > 0");
    ThetaSamples s;
    const auto count = static_cast<std::size_t>(std::ceil((t_max - t_min) / step - 1e-9));
    s.t.resize(count + 1);
    s.theta.resize(count + 1);
    for (std::size_t k = 0; k <= count; ++k) s.t[k] = k == count ? t_max : t_min + static_cast<double>(k) * step;
    detail::parallel_for(s.t.size(), [&](std::size_t k) { s.theta[k] = theta(s.t[k], cfg); });
    for (std::size_t k = 1; k < s.theta.size(); ++k)
        s.theta[k] -= 2.0 * pi * std::round((s.theta[k] - s.theta[k - 1]) / (2.0 * pi));
    return s;
}

enum class EventKind { PoleV, PoleF1, ZeroV, ZeroF1 };

inline std::string to_string(EventKind k) {
    switch (k) {
        case EventKind::PoleV: return "PoleV";
        case EventKind::PoleF1: return "PoleF1";
        case EventKind::ZeroV: return "ZeroV";
        case EventKind::ZeroF1: return "ZeroF1";
    }
    return "?";
}

struct EventRecord {
    EventKind kind = EventKind::PoleV;
    double t = 0;
    long level = 0;  // theta = level * pi/4 at the event
};

namespace detail {

inline double theta_near(double t, double reference, const EvalConfig& cfg) {
    const double th = theta(t, cfg);
    return th + 2.0 * pi * std::round((reference - th) / (2.0 * pi));
}

inline double refine_level(double lo, double hi, double th_lo, double th_hi, double level_value, double tol,
                           const EvalConfig& cfg) {
    double g_lo = th_lo - level_value;
    for (int it = 0; it < 60 && hi - lo > 2.0 * tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double ref = th_lo + (th_hi - th_lo) * (mid - lo) / (hi - lo);
        const double g = theta_near(mid, ref, cfg) - level_value;
        if ((g < 0) == (g_lo < 0)) {
            lo = mid;
            g_lo = g;
            th_lo = g + level_value;
        } else {
            hi = mid;
            th_hi = g + level_value;
        }
    }
    return 0.5 * (lo + hi);
}

inline EventKind kind_of_level(long level) {
    const long r = ((level % 4) + 4) % 4;
    switch (r) {
        case 0: return EventKind::PoleV;
        case 1: return EventKind::PoleF1;
        case 2: return EventKind::ZeroV;
        default: return EventKind::ZeroF1;
    }
}

}  // namespace detail

/// Zeros and poles of V and F1 on the critical line as crossings of
/// theta(t) = arg xi_1(1+2it) through multiples of pi/4:
/// 0 -> pole of V, pi/4 -> pole of F1, pi/2 -> zero of V, 3pi/4 -> zero of F1 (mod pi).
/// Throws OrderViolation when theta crosses a level downwards or skips one.
inline std::vector<EventRecord> interleaving_events(double t_min, double t_max, double step,
                                                    const EvalConfig& cfg = {}) {
    if (!(t_min >= 3.0)) throw DomainError("interleaving_events requires t_min >= 3");
    const auto samples = theta_unwrapped(t_min, t_max, step, cfg);
    const double quarter = pi / 4.0;
    std::vector<EventRecord> events;
    for (std::size_t k = 0; k + 1 < samples.t.size(); ++k) {
        const double a = samples.theta[k];
        const double b = samples.theta[k + 1];
        const long la = static_cast<long>(std::floor(a / quarter));
        const long lb = static_cast<long>(std::floor(b / quarter));
        if (lb < la)
            throw OrderViolation("theta decreases across a level near t = " + std::to_string(samples.t[k]));
        for (long level = la + 1; level <= lb; ++level) {
            EventRecord e;
            e.level = level;
            e.kind = detail::kind_of_level(level);
            e.t = detail::refine_level(samples.t[k], samples.t[k + 1], a, b, level * quarter, cfg.bisect_tol, cfg);
            events.push_back(e);
        }
    }
    for (std::size_t i = 1; i < events.size(); ++i) {
        if (events[i].level != events[i - 1].level + 1 || !(events[i].t > events[i - 1].t))
            throw OrderViolation("event order broken near t = " + std::to_string(events[i].t));
    }
    return events;
}

struct MonotonicityReport {
    double min_increment = 0;
    double min_increment_at = 0;
    std::vector<double> violations;  // grid points where theta decreased
};

/// Checks that the unwrapped theta(t) is nondecreasing on the grid.
inline MonotonicityReport monotonicity_check(double t_min, double t_max, double step, const EvalConfig& cfg = {}) {
    const auto s = theta_unwrapped(t_min, t_max, step, cfg);
    MonotonicityReport r;
    r.min_increment = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < s.t.size(); ++k) {
        const double inc = s.theta[k + 1] - s.theta[k];
        if (inc < r.min_increment) {
            r.min_increment = inc;
            r.min_increment_at = s.t[k];
        }
        if (inc < 0) r.violations.push_back(s.t[k]);
    }
    return r;
}

/// Same as monotonicity_check but throws on the first decrease.
inline MonotonicityReport require_monotonic(double t_min, double t_max, double step, const EvalConfig& cfg = {}) {
    auto r = monotonicity_check(t_min, t_max, step, cfg);
    if (!r.violations.empty())
        throw MonotonicityViolation("theta decreases near t = " + std::to_string(r.violations.front()));
    return r;
}

/// d theta / dt by central differences.
inline double theta_derivative(double t, const EvalConfig& cfg = {}, double h = 1e-5) {
    const double a = theta(t - h, cfg);
    double b = theta(t + h, cfg);
    b -= 2.0 * pi * std::round((b - a) / (2.0 * pi));
    return (b - a) / (2.0 * h);
}

/// Root of d theta/dt in (lo, hi): the point where Im V(1/2 + it) stops
/// decreasing. Throws DomainError when the derivative does not change sign.
inline double theta_derivative_root(double lo, double hi, const EvalConfig& cfg = {}) {
    double f_lo = theta_derivative(lo, cfg);
    const double f_hi = theta_derivative(hi, cfg);
    if ((f_lo < 0) == (f_hi < 0)) throw DomainError("theta' does not change sign on the interval");
    for (int it = 0; it < 60 && hi - lo > 1e-9; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = theta_derivative(mid, cfg);
        if ((fm < 0) == (f_lo < 0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Statistics over zero lists.

struct GapStats {
    double mean_gap = 0;
    double std_gap = 0;
    double normalized_std = 0;
};

inline GapStats gap_stats(const ZeroList& zeros) {
    if (zeros.size() < 2) throw InsufficientData("gap statistics need at least two zeros");
    std::vector<double> gaps;
    gaps.reserve(zeros.size() - 1);
    for (std::size_t i = 1; i < zeros.size(); ++i) gaps.push_back(zeros[i].t_star - zeros[i - 1].t_star);
    double mean = 0;
    for (double g : gaps) mean += g;
    mean /= static_cast<double>(gaps.size());
    double var = 0;
    for (double g : gaps) var += (g - mean) * (g - mean);
    var /= static_cast<double>(gaps.size());
    GapStats s;
    s.mean_gap = mean;
    s.std_gap = std::sqrt(var);
    s.normalized_std = s.std_gap / mean;
    return s;
}

/// Number of indices i where the i-th zero of `a` lies strictly below the i-th zero of `b`.
inline int ordering_statistics(const ZeroList& a, const ZeroList& b) {
    if (a.size() != b.size())
        throw CountMismatch("zero lists differ in length: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
    int n = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].t_star < b[i].t_star) ++n;
    return n;
}

/// First `n` records of a list (for comparisons over "the first n zeros").
inline ZeroList first_n(const ZeroList& zs, std::size_t n) {
    if (zs.size() < n) throw InsufficientData("fewer than " + std::to_string(n) + " zeros available");
    return {zs.begin(), zs.begin() + static_cast<std::ptrdiff_t>(n)};
}

/// CSV `func,index,t_star,residual` with 12 significant digits.
inline void write_zero_csv(std::ostream& out, const ZeroList& zeros) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "func,index,t_star,residual\n" << std::setprecision(12);
    for (const auto& z : zeros) os << to_string(z.func) << ',' << z.index << ',' << z.t_star << ',' << z.residual << '\n';
    out << os.str();
}

}  // namespace symzeta
