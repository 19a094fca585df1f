#pragma once

// Drivers behind the command-line tool: evaluation, tables, phase grids and
// the modified-function experiments. Each run_* returns a process exit code.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "symzeta/combined.hpp"
#include "symzeta/config.hpp"
#include "symzeta/special.hpp"
#include "symzeta/zeros.hpp"

namespace symzeta {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kIo = 3 };

/// Quadrant of a complex value. Ties on the axes go counterclockwise-first:
/// 1 = (Re > 0, Im >= 0), 2 = (Re <= 0, Im > 0), 3 = (Re < 0, Im <= 0),
/// 4 = (Re >= 0, Im < 0); the origin is assigned 1.
inline int quadrant(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    if (x > 0 && y >= 0) return 1;
    if (x <= 0 && y > 0) return 2;
    if (x < 0 && y <= 0) return 3;
    if (x >= 0 && y < 0) return 4;
    return 1;
}

struct PhaseWindow {
    double sigma_min = 0, sigma_max = 1;
    double t_min = 0, t_max = 1;
    int n_sigma = 2, n_t = 2;

    void validate() const {
        if (!(sigma_min < sigma_max) || !(t_min < t_max)) throw DomainError("phase window is empty");
        if (n_sigma < 2 || n_t < 2) throw DomainError("phase window needs at least 2 points per axis");
    }
    [[nodiscard]] double sigma_at(int i) const { return sigma_min + (sigma_max - sigma_min) * i / (n_sigma - 1); }
    [[nodiscard]] double t_at(int j) const { return t_min + (t_max - t_min) * j / (n_t - 1); }
};

struct PhaseGrid {
    PhaseWindow window;
    std::vector<int> quadrant;        // n_t rows of n_sigma, row-major in t
    std::vector<double> log_modulus;  // NaN where the function could not be evaluated

    [[nodiscard]] int at(int i_sigma, int j_t) const {
        return quadrant[static_cast<std::size_t>(j_t) * window.n_sigma + i_sigma];
    }
};

inline PhaseGrid phase_grid(const std::function<Complex(Complex)>& f, const PhaseWindow& w) {
    w.validate();
    PhaseGrid g;
    g.window = w;
    const std::size_t n = static_cast<std::size_t>(w.n_sigma) * w.n_t;
    g.quadrant.assign(n, 0);
    g.log_modulus.assign(n, std::nan(""));
    detail::parallel_for(static_cast<std::size_t>(w.n_t), [&](std::size_t j) {
        for (int i = 0; i < w.n_sigma; ++i) {
            const std::size_t k = j * w.n_sigma + i;
            try {
                const Complex v = f(Complex(w.sigma_at(i), w.t_at(static_cast<int>(j))));
                g.quadrant[k] = quadrant(v);
                g.log_modulus[k] = std::log(std::abs(v));
            } catch (const PoleError&) {
                g.quadrant[k] = 0;  // on a pole or branch point
            }
        }
    });
    return g;
}

inline PhaseGrid phase_grid(FuncId func, const PhaseWindow& w, const EvalConfig& cfg = {}) {
    return phase_grid([&](Complex s) { return evaluate(func, s, cfg); }, w);
}

/// CSV `sigma,t,quadrant,log_modulus`.
inline void write_phase_csv(std::ostream& out, const PhaseGrid& g) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "sigma,t,quadrant,log_modulus\n" << std::setprecision(12);
    for (int j = 0; j < g.window.n_t; ++j)
        for (int i = 0; i < g.window.n_sigma; ++i) {
            const auto k = static_cast<std::size_t>(j) * g.window.n_sigma + i;
            os << g.window.sigma_at(i) << ',' << g.window.t_at(j) << ',' << g.quadrant[k] << ',';
            if (std::isnan(g.log_modulus[k])) os << "nan";
            else os << g.log_modulus[k];
            os << '\n';
        }
    out << os.str();
}

/// Functions reachable from `eval`: every FuncId plus the special functions.
inline Complex evaluate_named(const std::string& name, Complex s, const EvalConfig& cfg = {}) {
    if (name == "zeta") return zeta(s, cfg);
    if (name == "gamma") return symzeta::gamma(s);
    if (name == "lngamma") return log_gamma(s);
    if (name == "L4") return dirichlet_L4(s, cfg);
    if (name == "xi1") return xi1(s, cfg);
    return evaluate(parse_func_id(name), s, cfg);
}

/// Prints `re,im` with 15 significant digits.
inline int run_eval(const std::string& name, Complex s, std::ostream& out, std::ostream& err,
                    const EvalConfig& cfg = {}) {
    try {
        const Complex v = evaluate_named(name, s, cfg);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.15g,%.15g", v.real(), v.imag());
        out << buf << '\n';
        return kOk;
    } catch (const PoleError& e) {
        err << "pole: " << e.what() << '\n';
        return kDomain;
    } catch (const DomainError& e) {
        if (std::string(e.what()).find("unknown function") != std::string::npos) {
            err << e.what() << '\n';
            return kUsage;
        }
        err << "domain: " << e.what() << '\n';
        return kDomain;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kDomain;
    }
}

/// Zero counts per interval, one column per function, then a totals row.
inline void write_count_csv(std::ostream& out, const CountTable& table, const std::vector<FuncId>& funcs) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "range";
    for (FuncId f : funcs) os << ',' << to_string(f);
    os << '\n';
    std::vector<int> total(funcs.size(), 0);
    for (std::size_t i = 0; i < table.intervals.size(); ++i) {
        os << table.intervals[i].first << '-' << table.intervals[i].second;
        for (std::size_t c = 0; c < funcs.size(); ++c) {
            const int n = table.counts.at(funcs[c])[i];
            total[c] += n;
            os << ',' << n;
        }
        os << '\n';
    }
    os << table.intervals.front().first << '-' << table.intervals.back().second;
    for (int n : total) os << ',' << n;
    os << '\n';
    out << os.str();
}

inline const std::vector<FuncId>& table_functions() {
    static const std::vector<FuncId> f{FuncId::C01, FuncId::TMinus, FuncId::TPlus, FuncId::ZetaShift};
    return f;
}

inline int run_table(double t_max, double width, const std::vector<FuncId>& funcs, std::ostream& out,
                     const EvalConfig& cfg = {}) {
    const auto table = count_table(funcs, uniform_intervals(0.0, t_max, width), 0.05, cfg);
    write_count_csv(out, table, funcs);
    return kOk;
}

// ---------------------------------------------------------------------------
// Modified U: on-line events and windowed counts.

/// Phase of the modified U on the critical line, unwrapped along the grid.
/// The modifications keep |U| = 1 on the line, so V = i cot(phase/2) there:
/// phase = 0 mod 2 pi is a pole of V, phase = pi mod 2 pi a zero.
struct LinePhase {
    std::vector<double> t;
    std::vector<double> phase;
};

inline LinePhase modified_line_phase(const ModifiedSpec& spec, const ZetaZeroList& zeros, double t_min,
                                     double t_max, double step, const EvalConfig& cfg = {}) {
    if (!(t_min < t_max) || !(step > 0)) throw DomainError("invalid line window");
    LinePhase lp;
    const auto count = static_cast<std::size_t>(std::ceil((t_max - t_min) / step - 1e-9));
    lp.t.resize(count + 1);
    lp.phase.resize(count + 1);
    for (std::size_t k = 0; k <= count; ++k) lp.t[k] = k == count ? t_max : t_min + static_cast<double>(k) * step;
    detail::parallel_for(lp.t.size(), [&](std::size_t k) {
        lp.phase[k] = std::arg(modified_u(spec, zeros, Complex(0.5, lp.t[k]), cfg));
    });
    for (std::size_t k = 1; k < lp.phase.size(); ++k)
        lp.phase[k] -= 2.0 * pi * std::round((lp.phase[k] - lp.phase[k - 1]) / (2.0 * pi));
    return lp;
}

struct LineEvent {
    bool is_pole = false;  // pole of the modified V, else a zero
    double t = 0;
};

struct CounterexampleReport {
    ModifiedSpec spec;
    double t_min = 0, t_max = 0;
    std::vector<LineEvent> events;
    std::vector<LineEvent> baseline;  // unmodified V in the same window
    bool monotone = true;             // phase strictly one-directional on the grid
    bool alternating = true;          // zeros and poles alternate
};

namespace detail {

inline std::vector<LineEvent> line_events(const LinePhase& lp) {
    std::vector<LineEvent> ev;
    for (std::size_t k = 0; k + 1 < lp.t.size(); ++k) {
        const double a = lp.phase[k] / pi;
        const double b = lp.phase[k + 1] / pi;
        const long lo = static_cast<long>(std::floor(std::min(a, b)));
        const long hi = static_cast<long>(std::floor(std::max(a, b)));
        for (long m = lo + 1; m <= hi; ++m) {
            const double frac = (m - a) / (b - a);
            ev.push_back({m % 2 == 0, lp.t[k] + frac * (lp.t[k + 1] - lp.t[k])});
        }
    }
    return ev;
}

inline bool alternates(const std::vector<LineEvent>& ev) {
    for (std::size_t i = 1; i < ev.size(); ++i)
        if (ev[i].is_pole == ev[i - 1].is_pole) return false;
    return true;
}

}  // namespace detail

namespace detail {

// Index of the grid point nearest `t` where the unwrapped baseline phase is
// closest to pi/4 mod pi/2. Both the doubled and the shifted phase are then
// at least pi/4 away from any event, so windowed counts are not disturbed by
// events sliding across the window edge.
inline std::size_t snap_index(const LinePhase& base, double t) {
    std::size_t near = 0;
    for (std::size_t k = 0; k < base.t.size(); ++k)
        if (std::abs(base.t[k] - t) < std::abs(base.t[near] - t)) near = k;
    const double quarter = pi / 2.0;
    auto offset = [&](std::size_t k) {
        const double x = base.phase[k] / quarter - 0.5;
        return std::abs(x - std::round(x));
    };
    // search outward within one phase period
    std::size_t best = near;
    for (std::size_t d = 0; d < base.t.size(); ++d) {
        bool any = false;
        for (std::size_t k : {near + d, near - d}) {
            if (k >= base.t.size()) continue;
            any = true;
            if (offset(k) < offset(best)) best = k;
        }
        if (!any || std::abs(base.phase[std::min(near + d, base.t.size() - 1)] - base.phase[near]) > pi) break;
    }
    return best;
}

inline std::vector<LineEvent> events_between(const std::vector<LineEvent>& ev, double lo, double hi) {
    std::vector<LineEvent> out;
    for (const auto& e : ev)
        if (e.t > lo && e.t < hi) out.push_back(e);
    return out;
}

}  // namespace detail

/// Events of the modified V on the line near [t_min, t_max] against the
/// unmodified V. The window ends are moved to the nearest points where the
/// baseline phase is pi/4 mod pi/2 (see snap_index); the report holds the
/// moved window. Locations are linearly interpolated within the grid step.
inline CounterexampleReport run_counterexample(const ModifiedSpec& spec, const ZetaZeroList& zeros, double t_min,
                                               double t_max, double step = 0.001, const EvalConfig& cfg = {}) {
    const double pad = 0.5;
    const auto lp = modified_line_phase(spec, zeros, t_min - pad, t_max + pad, step, cfg);
    LinePhase base;
    base.t = lp.t;
    base.phase.resize(lp.t.size());
    detail::parallel_for(base.t.size(), [&](std::size_t k) {
        base.phase[k] = std::arg(u_fn(Complex(0.5, base.t[k]), cfg));
    });
    for (std::size_t k = 1; k < base.phase.size(); ++k)
        base.phase[k] -= 2.0 * pi * std::round((base.phase[k] - base.phase[k - 1]) / (2.0 * pi));

    const std::size_t lo = detail::snap_index(base, t_min);
    const std::size_t hi = detail::snap_index(base, t_max);
    CounterexampleReport r;
    r.spec = spec;
    r.t_min = base.t[lo];
    r.t_max = base.t[hi];
    r.events = detail::events_between(detail::line_events(lp), r.t_min, r.t_max);
    r.baseline = detail::events_between(detail::line_events(base), r.t_min, r.t_max);

    int direction = 0;
    for (std::size_t k = lo; k < hi; ++k) {
        const double d = lp.phase[k + 1] - lp.phase[k];
        const int sgn = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (sgn == 0 || (direction != 0 && sgn != direction)) r.monotone = false;
        if (direction == 0) direction = sgn;
    }
    r.alternating = detail::alternates(r.events);
    return r;
}

/// CSV `series,kind,t` for modified and baseline events.
inline void write_counterexample_csv(std::ostream& out, const CounterexampleReport& r) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "series,kind,t\n" << std::setprecision(12);
    for (const auto& e : r.events) os << "modified," << (e.is_pole ? "pole" : "zero") << ',' << e.t << '\n';
    for (const auto& e : r.baseline) os << "baseline," << (e.is_pole ? "pole" : "zero") << ',' << e.t << '\n';
    out << os.str();
}

// ---------------------------------------------------------------------------

struct CriticalPoint {
    Complex s;
    Complex value;  // U(s)
    int iterations = 0;
};

/// Zero of U'(s) by Newton iteration on central differences.
inline CriticalPoint critical_point(Complex guess, const EvalConfig& cfg = {}) {
    const double h = 1e-4;
    auto d1 = [&](Complex s) {
        return (-u_fn(s + 2.0 * h, cfg) + 8.0 * u_fn(s + h, cfg) - 8.0 * u_fn(s - h, cfg) + u_fn(s - 2.0 * h, cfg)) /
               (12.0 * h);
    };
    auto d2 = [&](Complex s) { return (u_fn(s + h, cfg) - 2.0 * u_fn(s, cfg) + u_fn(s - h, cfg)) / (h * h); };
    CriticalPoint cp;
    Complex s = guess;
    for (int it = 1; it <= 50; ++it) {
        const Complex step = d1(s) / d2(s);
        s -= step;
        cp.iterations = it;
        if (std::abs(step) < 1e-10) break;
        if (std::abs(s - guess) > 1.0) throw ConvergenceError("critical point search left the neighbourhood");
    }
    cp.s = s;
    cp.value = u_fn(s, cfg);
    return cp;
}

}  // namespace symzeta
