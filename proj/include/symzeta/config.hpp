#pragma once

#include <complex>
#include <istream>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symzeta {

/// A point s = sigma + i t. Components are always finite.
using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// Error hierarchy. Every failure raised by the library derives from Error so
// callers can catch broadly and map to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct OrderError : Error { using Error::Error; };
struct CountMismatch : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct OrderViolation : Error { using Error::Error; };
struct MonotonicityViolation : Error { using Error::Error; };
struct SignViolation : Error { using Error::Error; };

/// Numerical knobs shared by every evaluator.
struct EvalConfig {
    /// Minimum Euler-Maclaurin direct-sum length for zeta. The actual length
    /// is max(zeta_em_terms, ceil(1.3 |Im s|)).
    int zeta_em_terms = 32;
    /// Number of Bernoulli correction terms (at most 12).
    int zeta_em_order = 12;
    /// Hard cap on the Bessel integral truncation point |u|.
    double quad_upper = 30.0;
    /// Initial trapezoid step for the Bessel integral; halved until stable.
    double quad_step = 0.25;
    /// Zero refinement tolerance in t.
    double bisect_tol = 1e-10;
    double target_rel_err = 1e-10;

    void validate() const {
        if (zeta_em_terms < 16)
            throw DomainError("zeta_em_terms must be >= 16");
        if (zeta_em_order < 1 || zeta_em_order > 12)
            throw DomainError("zeta_em_order must lie in [1, 12]");
        if (!(quad_upper > 0) || !(quad_step > 0))
            throw DomainError("quadrature bounds must be positive");
        if (!(bisect_tol > 0))
            throw DomainError("bisect_tol must be positive");
        if (!(target_rel_err > 0) || target_rel_err > 1e-6)
            throw DomainError("target_rel_err must lie in (0, 1e-6]");
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("cannot parse " + what + ": '" + text + "'");
    }
}

}  // namespace detail

/// Reads an EvalConfig from `key=value` lines. Blank lines and lines starting
/// with '#' are ignored; unknown keys are rejected.
inline EvalConfig parse_config(std::istream& in) {
    EvalConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        const double v = detail::parse_double(val, key);
        if (key == "zeta_em_terms") cfg.zeta_em_terms = static_cast<int>(v);
        else if (key == "zeta_em_order") cfg.zeta_em_order = static_cast<int>(v);
        else if (key == "quad_upper") cfg.quad_upper = v;
        else if (key == "quad_step") cfg.quad_step = v;
        else if (key == "bisect_tol") cfg.bisect_tol = v;
        else if (key == "target_rel_err") cfg.target_rel_err = v;
        else throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

}  // namespace symzeta
