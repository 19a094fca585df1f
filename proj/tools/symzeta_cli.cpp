// symzeta: evaluate the symmetrized zeta combinations, count and tabulate
// their critical-line zeros, and emit the CSV data behind phase plots.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "symzeta/symzeta.hpp"

namespace {

using namespace symzeta;

struct Globals {
    std::string config_path;
    std::string zeros_path;
    std::string out_path;
    std::uint64_t seed = 20250101;
};

// Writes to --out when given, otherwise stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::ios_base::failure("cannot open output file " + path);
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void close() {
        if (!file_) return;
        file_->close();
        if (file_->fail()) throw std::ios_base::failure("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

EvalConfig load_config(const Globals& g) {
    if (g.config_path.empty()) return {};
    std::ifstream in(g.config_path);
    if (!in) throw std::ios_base::failure("cannot open config " + g.config_path);
    return parse_config(in);
}

// Loaded table, or computed ordinates up to height t_needed. With count > 0 the
// computed range grows until that many zeros are present.
ZetaZeroList zeros_for(const Globals& g, double t_needed, std::size_t count, const EvalConfig& cfg) {
    if (!g.zeros_path.empty()) return load_zeta_zeros(g.zeros_path);
    double t = count > 0 ? 50.0 : t_needed;
    for (;;) {
        auto z = compute_zeta_zeros(t, cfg);
        if (z.size() >= count || t >= 1300.0) return z;
        t = std::min(1300.0, 2.0 * t);
    }
}

std::vector<FuncId> parse_funcs(const std::string& list) {
    std::vector<FuncId> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_func_id(detail::trim(item)));
    return out;
}

ModifiedVariant parse_variant(const std::string& name) {
    if (name == "DoubleOne") return ModifiedVariant::DoubleOne;
    if (name == "DoubleAll") return ModifiedVariant::DoubleAll;
    if (name == "SplitPair") return ModifiedVariant::SplitPair;
    throw DomainError("unknown variant '" + name + "'");
}

const CLI::Validator kFuncName(
    [](std::string& name) -> std::string {
        try {
            parse_func_id(name);
            return {};
        } catch (const DomainError& e) {
            return e.what();
        }
    },
    "FUNC");

const CLI::Validator kFuncList(
    [](std::string& list) -> std::string {
        try {
            parse_funcs(list);
            return {};
        } catch (const DomainError& e) {
            return e.what();
        }
    },
    "FUNC[,FUNC...]");

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetrized zeta combinations: evaluation, zero tables, phase grids"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--config", g.config_path, "EvalConfig file of key=value lines");
    app.add_option("--zeros", g.zeros_path, "zeta ordinate table, one per line (default: computed)");
    app.add_option("--out", g.out_path, "output path (default: stdout)");
    app.add_option("--seed", g.seed, "random seed for sampled checks")->capture_default_str();

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a function at sigma + i t");
    std::string eval_name;
    double eval_sigma = 0, eval_t = 0;
    eval->add_option("func", eval_name, "TPlus TMinus U V F1 C01 ZetaShift Xi1Shift zeta gamma lngamma L4 xi1")
        ->required();
    eval->add_option("sigma", eval_sigma)->required();
    eval->add_option("t", eval_t)->required();

    // table
    auto* table = app.add_subcommand("table", "zero counts per interval on the critical line");
    double table_tmax = 300, table_width = 10;
    std::string table_funcs = "C01,TMinus,TPlus,ZetaShift";
    table->add_option("--t-max", table_tmax)->capture_default_str();
    table->add_option("--width", table_width)->capture_default_str();
    table->add_option("--funcs", table_funcs)->check(kFuncList)->capture_default_str();

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "list critical-line zeros of one function");
    std::string scan_func;
    double scan_tmin = 0, scan_tmax = 100, scan_step = 0.05;
    scan_cmd->add_option("func", scan_func)->required()->check(kFuncName);
    scan_cmd->add_option("--t-min", scan_tmin)->capture_default_str();
    scan_cmd->add_option("--t-max", scan_tmax)->capture_default_str();
    scan_cmd->add_option("--step", scan_step)->capture_default_str();

    // phase-grid
    auto* grid = app.add_subcommand("phase-grid", "quadrant of f(s) on a rectangular grid");
    std::string grid_func;
    PhaseWindow win{-1.0, 2.0, 0.0, 50.0, 61, 201};
    grid->add_option("func", grid_func)->required()->check(kFuncName);
    grid->add_option("--sigma-min", win.sigma_min)->capture_default_str();
    grid->add_option("--sigma-max", win.sigma_max)->capture_default_str();
    grid->add_option("--t-min", win.t_min)->capture_default_str();
    grid->add_option("--t-max", win.t_max)->capture_default_str();
    grid->add_option("--n-sigma", win.n_sigma)->capture_default_str();
    grid->add_option("--n-t", win.n_t)->capture_default_str();

    // potential
    auto* pot = app.add_subcommand("potential", "log|U| expansion over zeta zeros against direct evaluation");
    double pot_sigma = 0.4, pot_tmin = 0, pot_tmax = 100;
    int pot_n = 200, sign_samples = 0;
    EMConfig em;
    pot->add_option("--sigma", pot_sigma)->capture_default_str();
    pot->add_option("--t-min", pot_tmin)->capture_default_str();
    pot->add_option("--t-max", pot_tmax)->capture_default_str();
    pot->add_option("-n", pot_n, "grid points")->capture_default_str();
    pot->add_option("-L", em.L, "pairs summed directly")->capture_default_str();
    pot->add_option("-q", em.q, "Euler-Maclaurin order")->capture_default_str();
    pot->add_option("--sign-samples", sign_samples, "run the half-plane sign check instead")->capture_default_str();

    // gaps
    auto* gaps = app.add_subcommand("gaps", "gap and ordering statistics of T-, T+ and zeta(2s-1/2) zeros");
    double gaps_tmax = 1000;
    gaps->add_option("--t-max", gaps_tmax)->capture_default_str();

    // counterexample
    auto* cex = app.add_subcommand("counterexample", "events of a modified V near a chosen zeta zero");
    std::string cex_variant = "DoubleAll";
    ModifiedSpec mspec;
    double cex_half = 2.0;
    std::string cex_grid;
    cex->add_option("--variant", cex_variant)
        ->check(CLI::IsMember({"DoubleOne", "DoubleAll", "SplitPair"}))
        ->capture_default_str();
    cex->add_option("--index", mspec.index_N, "zeta zero number N")->capture_default_str();
    cex->add_option("--delta", mspec.delta, "SplitPair offset")->capture_default_str();
    cex->add_option("--half-width", cex_half)->capture_default_str();
    cex->add_option("--grid", cex_grid, "also write the phase grid of the modified V here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        const EvalConfig cfg = load_config(g);
        Sink sink(g.out_path);
        std::ostream& out = sink.stream();
        out.imbue(std::locale::classic());
        int code = kOk;

        if (*eval) {
            code = run_eval(eval_name, {eval_sigma, eval_t}, out, std::cerr, cfg);
        } else if (*table) {
            code = run_table(table_tmax, table_width, parse_funcs(table_funcs), out, cfg);
        } else if (*scan_cmd) {
            write_zero_csv(out, scan(parse_func_id(scan_func), scan_tmin, scan_tmax, scan_step, cfg));
        } else if (*grid) {
            write_phase_csv(out, phase_grid(parse_func_id(grid_func), win, cfg));
        } else if (*pot) {
            if (sign_samples > 0) {
                const auto r = half_plane_sign_check({sign_samples, g.seed, 3.0, 300.0}, cfg);
                out << "samples,seed,violations,exceptional\n"
                    << r.samples << ',' << r.seed << ',' << r.violations.size() << ',' << r.exceptional.size() << '\n';
                if (!r.violations.empty()) code = kDomain;
            } else {
                const auto zeros = zeros_for(g, 0.0, static_cast<std::size_t>(em.L), cfg);
                write_expansion_csv(out, expansion_profile(pot_sigma, pot_tmin, pot_tmax, pot_n, zeros, em, cfg));
            }
        } else if (*gaps) {
            const auto tm = scan(FuncId::TMinus, 0, gaps_tmax, 0.05, cfg);
            const auto tp = scan(FuncId::TPlus, 0, gaps_tmax, 0.05, cfg);
            const auto zz = scan(FuncId::ZetaShift, 0, gaps_tmax, 0.05, cfg);
            out << "func,count,mean_gap,std_gap,normalized_std\n" << std::setprecision(6);
            for (const auto* z : {&tm, &tp, &zz}) {
                const auto s = gap_stats(*z);
                out << to_string(z->front().func) << ',' << z->size() << ',' << s.mean_gap << ',' << s.std_gap << ','
                    << s.normalized_std << '\n';
            }
            const std::size_t n = std::min({tm.size(), tp.size(), zz.size()});
            out << "# TMinus before ZetaShift: " << ordering_statistics(first_n(tm, n), first_n(zz, n))
                << ", ZetaShift before TPlus: " << ordering_statistics(first_n(zz, n), first_n(tp, n)) << " (first "
                << n << ")\n";
        } else if (*cex) {
            mspec.variant = parse_variant(cex_variant);
            const auto zeros = zeros_for(g, 0.0, static_cast<std::size_t>(std::max(mspec.index_N, 0)) + 10, cfg);
            const double tn = zeros.nth(mspec.index_N).t;
            const auto r = run_counterexample(mspec, zeros, tn - cex_half, tn + cex_half, 0.001, cfg);
            write_counterexample_csv(out, r);
            if (!cex_grid.empty()) {
                std::ofstream gout(cex_grid);
                if (!gout) throw std::ios_base::failure("cannot open " + cex_grid);
                const PhaseWindow w{0.0, 1.0, tn - cex_half, tn + cex_half, 101, 401};
                write_phase_csv(gout, phase_grid([&](Complex s) { return modified_v(mspec, zeros, s, cfg); }, w));
            }
        }
        sink.close();
        return code;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io: " << e.what() << '\n';
        return kIo;
    } catch (const ParseError& e) {
        std::cerr << "parse: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kDomain;
    }
}
