// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any fails. Tolerances are fixed here and never adjusted to the results.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "symzeta/symzeta.hpp"

using namespace symzeta;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& measured) {
    std::printf("%s [%d] %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), measured.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const ZetaZeroList& table_zeros() {
    static const auto z = load_zeta_zeros(std::string(SYMZETA_TEST_DATA) + "/zeta_zeros_2000.txt");
    return z;
}

// Published decade counts on (0, 300], columns C01, TMinus, TPlus, ZetaShift.
constexpr std::array<std::array<int, 4>, 30> kDecades{{
    {1, 1, 1, 1},     {5, 5, 5, 5},     {7, 7, 7, 7},     {7, 7, 8, 8},     {10, 9, 8, 8},
    {8, 9, 9, 9},     {10, 9, 10, 10},  {10, 11, 10, 10}, {11, 10, 11, 11}, {10, 11, 10, 10},
    {11, 11, 11, 11}, {12, 11, 12, 12}, {12, 12, 12, 12}, {12, 12, 12, 12}, {11, 12, 12, 12},
    {13, 13, 12, 12}, {13, 12, 13, 13}, {14, 13, 13, 13}, {13, 13, 13, 13}, {12, 13, 13, 13},
    {14, 13, 13, 13}, {13, 14, 14, 14}, {14, 14, 13, 13}, {14, 14, 14, 14}, {14, 13, 13, 13},
    {14, 14, 15, 14}, {14, 14, 14, 14}, {14, 15, 14, 15}, {14, 14, 14, 14}, {14, 14, 15, 15},
}};
constexpr std::array<int, 4> kDecadeTotals{342, 340, 341, 341};

// Published century counts on (0, 1000], same column order.
constexpr std::array<std::array<int, 4>, 10> kCenturies{{
    {79, 79, 79, 79},
    {122, 122, 123, 123},
    {140, 139, 139, 139},
    {150, 150, 150, 150},
    {157, 158, 158, 158},
    {166, 165, 164, 164},
    {168, 169, 170, 170},
    {176, 175, 174, 174},
    {178, 178, 178, 178},
    {181, 182, 182, 182},
}};

const std::vector<FuncId> kCols{FuncId::C01, FuncId::TMinus, FuncId::TPlus, FuncId::ZetaShift};

void table1() {
    const auto t = count_table(kCols, uniform_intervals(0, 300, 10));
    int mismatched = 0;
    std::string cells;
    std::array<int, 4> totals{};
    for (std::size_t i = 0; i < kDecades.size(); ++i) {
        for (std::size_t c = 0; c < 4; ++c) {
            const int n = t.counts.at(kCols[c])[i];
            totals[c] += n;
            if (n != kDecades[i][c]) {
                ++mismatched;
                cells += fmt(" %s@%d-%d=%d/%d", to_string(kCols[c]).c_str(), static_cast<int>(10 * i),
                             static_cast<int>(10 * i + 10), n, kDecades[i][c]);
            }
        }
    }
    report(1, mismatched == 0 && totals == kDecadeTotals, "decade counts on (0,300]",
           fmt("totals C/T-/T+/zeta %d/%d/%d/%d, %d mismatched cells:%s", totals[0], totals[1], totals[2], totals[3],
               mismatched, cells.c_str()));
}

struct Scans {
    ZeroList tm, tp, zz;
};

void table2(Scans& scans) {
    const auto t = count_table(kCols, uniform_intervals(0, 1000, 100));
    scans.tm = t.zeros.at(FuncId::TMinus);
    scans.tp = t.zeros.at(FuncId::TPlus);
    scans.zz = t.zeros.at(FuncId::ZetaShift);
    int mismatched = 0;
    std::array<int, 4> totals{};
    for (std::size_t i = 0; i < kCenturies.size(); ++i)
        for (std::size_t c = 0; c < 4; ++c) {
            const int n = t.counts.at(kCols[c])[i];
            totals[c] += n;
            mismatched += n != kCenturies[i][c];
        }
    const bool ok = mismatched == 0 && std::all_of(totals.begin(), totals.end(), [](int n) { return n == 1517; });
    report(2, ok, "century counts on (0,1000]",
           fmt("totals %d/%d/%d/%d, %d mismatched cells", totals[0], totals[1], totals[2], totals[3], mismatched));
}

void functional_equations() {
    std::mt19937_64 rng(20250101);
    std::uniform_real_distribution<double> sig(-2.0, 3.0), tt(1.0, 500.0);
    double worst_u = 0, worst_xi = 0, worst_f = 0, worst_v = 0;
    for (int k = 0; k < 200; ++k) {
        const Complex s(sig(rng), tt(rng));
        worst_u = std::max(worst_u, std::abs(u_fn(s) * u_fn(1.0 - s) - 1.0));
        worst_xi = std::max(worst_xi, std::abs(xi1(1.0 - s) - xi1(s)) / std::abs(xi1(s)));
        worst_f = std::max(worst_f, std::abs(f1_fn(s) * f1_fn(1.0 - s) - 1.0));
        const Complex v = v_fn(s);
        worst_v = std::max(worst_v, std::abs(v + v_fn(1.0 - s)) / std::max(1.0, std::abs(v)));
    }
    const double worst = std::max({worst_u, worst_xi, worst_f, worst_v});
    report(3, worst <= 1e-9, "functional equations on 200 random points",
           fmt("max rel err UU %.2e, xi %.2e, FF %.2e, V odd %.2e", worst_u, worst_xi, worst_f, worst_v));
}

void kober() {
    std::mt19937_64 rng(20250101);
    std::uniform_real_distribution<double> sig(0.2, 0.8), tt(2.0, 50.0);
    double worst = 0;
    for (int k = 0; k < 20; ++k) worst = std::max(worst, kober_identity_residual({sig(rng), tt(rng)}));
    report(4, worst <= 1e-8, "Kober lattice-sum identity at 20 points", fmt("max residual %.2e", worst));
}

void expansion_error() {
    const auto rows = expansion_profile(0.4, 0.0, 100.0, 200, table_zeros(), {1000, 0});
    double worst = 0, at = 0;
    for (const auto& r : rows)
        if (r.abs_err > worst) {
            worst = r.abs_err;
            at = r.t;
        }
    report(5, worst <= 0.000078, "log|U| expansion with tail, L=1000, sigma=0.4, t in [0,100]",
           fmt("max error %.4e at t=%.3f", worst, at));
}

void derivative() {
    const auto& z = table_zeros();
    double worst_fd = 0;
    const double h = 1e-5;
    for (double t = 5.0; t <= 100.0; t += 5.0) {
        const double fd =
            (std::log(std::abs(u_fn({0.5 + h, t}))) - std::log(std::abs(u_fn({0.5 - h, t})))) / (2 * h);
        worst_fd = std::max(worst_fd, std::abs(sigma_derivative_with_tail(t, z, 1000) - fd));
    }
    const double root = sigma_derivative_root(z, 1000, 2.5, 3.5);
    double peak = -1e300;
    for (int k = 1; k < 970; ++k) peak = std::max(peak, sigma_derivative_with_tail(3.0 + 0.1 * k, z, 1000));
    const bool ok = worst_fd <= 1e-4 && std::abs(root - 2.94334) <= 2e-3 && peak < 0.0;
    report(6, ok, "sigma-derivative on the line",
           fmt("fd diff %.2e, root %.6f, max on (3,100) %.3e", worst_fd, root, peak));
}

void threshold() {
    const double mid = first_pole_threshold(7.06736, 0.5);
    double lo = 1e9, hi = -1e9;
    for (int k = 0; k <= 200; ++k) {
        const double v = first_pole_threshold(7.06736, -0.5 + 0.01 * k);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const bool ok = std::abs(mid - 4.07268) <= 5e-5 && lo >= 4.0727 - 5e-5 && hi <= 4.1134 + 5e-5;
    report(7, ok, "first-pole threshold", fmt("at 1/2 %.6f, range [%.6f, %.6f]", mid, lo, hi));
}

void gaps(const Scans& s) {
    const auto a = gap_stats(s.tm), b = gap_stats(s.tp), c = gap_stats(s.zz);
    const bool mean_ok = std::abs(a.mean_gap - 0.655) <= 0.005 && std::abs(b.mean_gap - 0.655) <= 0.005 &&
                         std::abs(c.mean_gap - 0.655) <= 0.005;
    const bool std_ok = std::abs(a.normalized_std - 0.304) <= 0.01 && std::abs(b.normalized_std - 0.348) <= 0.01 &&
                        std::abs(c.normalized_std - 0.655) <= 0.01;
    report(8, mean_ok && std_ok, "gap statistics on (0,1000] for T-, T+, zeta(2s-1/2)",
           fmt("mean %.5f/%.5f/%.5f, normalized std %.5f/%.5f/%.5f (expected 0.304/0.348/0.655)", a.mean_gap,
               b.mean_gap, c.mean_gap, a.normalized_std, b.normalized_std, c.normalized_std));
}

void ordering(const Scans& s) {
    const int a = ordering_statistics(first_n(s.tm, 1517), first_n(s.zz, 1517));
    const int b = ordering_statistics(first_n(s.zz, 1517), first_n(s.tp, 1517));
    report(9, a == 4 && b == 235, "ordering in the first 1517 zeros",
           fmt("T- before zeta %d, zeta before T+ %d", a, b));
}

void interleaving(const Scans& s) {
    std::vector<EventRecord> ev;
    std::string error;
    try {
        ev = interleaving_events(3.0, 1000.0, 0.01);
    } catch (const OrderViolation& e) {
        error = e.what();
    }
    std::array<int, 4> n{};
    for (const auto& e : ev) ++n[static_cast<std::size_t>(e.kind)];
    auto above3 = [](const ZeroList& zs) {
        return static_cast<int>(std::count_if(zs.begin(), zs.end(), [](const auto& z) { return z.t_star > 3.0; }));
    };
    const int tm = above3(s.tm), tp = above3(s.tp), f1 = above3(scan(FuncId::F1, 0, 1000, 0.05));
    const bool ok = error.empty() && n[static_cast<std::size_t>(EventKind::PoleV)] == tm &&
                    n[static_cast<std::size_t>(EventKind::ZeroV)] == tp &&
                    n[static_cast<std::size_t>(EventKind::ZeroF1)] == f1;
    report(10, ok, "interleaving of zeros and poles of V and F1 on (3,1000)",
           error.empty() ? fmt("%zu events; PoleV %d vs T- zeros %d, ZeroV %d vs T+ zeros %d, ZeroF1 %d vs F1 zeros %d",
                               ev.size(), n[0], tm, n[2], tp, n[3], f1)
                         : "order violation: " + error);
}

void half_plane() {
    const auto r = half_plane_sign_check({});
    report(11, r.violations.empty(), "sign of log|U| off the line, t > 3",
           fmt("%d samples, seed %llu, %zu violations", r.samples, static_cast<unsigned long long>(r.seed),
               r.violations.size()));
}

void counterexamples() {
    const auto& z = table_zeros();
    const double tn = z.nth(98).t;
    const auto all = run_counterexample({ModifiedVariant::DoubleAll, 98, 0.05}, z, tn - 2, tn + 2);
    const auto split = run_counterexample({ModifiedVariant::SplitPair, 98, 0.05}, z, tn - 2, tn + 2);
    int split_poles = 0;
    for (const auto& e : split.events) split_poles += e.is_pole;
    const int split_zeros = static_cast<int>(split.events.size()) - split_poles;
    const bool ok = !all.baseline.empty() && all.events.size() == 2 * all.baseline.size() && split.alternating &&
                    split.monotone && std::abs(split_poles - split_zeros) <= 1;
    report(12, ok, "modified V near t_98",
           fmt("DoubleAll %zu events vs %zu baseline; SplitPair %d poles, %d zeros, alternating %d, monotone %d",
               all.events.size(), all.baseline.size(), split_poles, split_zeros, split.alternating, split.monotone));
}

template <class F>
void timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("      %.1f s\n", secs);
}

}  // namespace

int main() {
    Scans scans;
    timed(table1);
    timed([&] { table2(scans); });
    timed(functional_equations);
    timed(kober);
    timed(expansion_error);
    timed(derivative);
    timed(threshold);
    timed([&] { gaps(scans); });
    timed([&] { ordering(scans); });
    timed([&] { interleaving(scans); });
    timed(half_plane);
    timed(counterexamples);
    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
