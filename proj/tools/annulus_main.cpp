// Command line front end: solve, energy, verify, threshold, sweep, plot.
// Exit codes: 0 success, 1 numerical or invariant failure, 2 nonexistence
// (the p = 1 threshold is a mathematical outcome, not a fault).

#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "annulus/energy.hpp"
#include "annulus/minimizer.hpp"
#include "annulus/report_io.hpp"
#include "annulus/verify.hpp"

namespace fs = std::filesystem;
using namespace annulus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNonexistence = 2;

struct RunConfig {
    double r = 2.0;
    double R = 2.0;
    double p = 1.5;
    std::size_t nodes = 1000;
    std::size_t nt = 512;
    std::size_t ntheta = 512;
    std::uint64_t seed = 1;
    std::size_t trials = 50;
    std::string out_dir = ".";
    std::string format = "csv";
    std::string map_file;
    std::string negative_control = "none";
    std::string r_list, R_list, p_list;
    double quad_tol = 1e-9;
    double build_tol = 1e-11;
};

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string point_tag(double r, double R, double p) {
    return "r" + short_num(r) + "_R" + short_num(R) + "_p" + short_num(p);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

void apply_env_quad_tol(RunConfig& cfg) {
    const char* env = std::getenv("ANNULUS_QUAD_TOL");
    if (!env) return;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
        throw domain_error("ANNULUS_QUAD_TOL must be a positive real, got `" +
                           std::string(env) + "`");
    cfg.quad_tol = v;
    cfg.build_tol = std::min(v, 1e-11);
}

void validate_point(const RunConfig& cfg) {
    std::string problems;
    const auto add = [&](const std::string& msg) {
        if (!problems.empty()) problems += "; ";
        problems += msg;
    };
    if (!(cfg.r > 1.0)) add("--r must be > 1 (got " + short_num(cfg.r) + ")");
    if (!(cfg.R > 1.0)) add("--R must be > 1 (got " + short_num(cfg.R) + ")");
    if (!(cfg.p >= 1.0 && cfg.p <= 2.0)) add("--p must lie in [1, 2] (got " + short_num(cfg.p) + ")");
    if (cfg.nodes < 3) add("--nodes must be >= 3");
    if (cfg.nt < 16 || cfg.ntheta < 16) add("--nt and --ntheta must be >= 16");
    if (cfg.format != "csv" && cfg.format != "json") add("--format must be csv or json");
    if (!problems.empty()) throw domain_error("invalid configuration: " + problems);
}

minimizer::RadialMinimizer build_from(const RunConfig& cfg) {
    return minimizer::build_minimizer(cfg.r, cfg.R, geometry::Exponent(cfg.p), cfg.nodes,
                                      cfg.build_tol);
}

int cmd_solve(const RunConfig& cfg) {
    validate_point(cfg);
    const auto m = build_from(cfg);
    const auto report = energy::make_report(m, cfg.quad_tol);
    fs::create_directories(cfg.out_dir);
    const std::string tag = point_tag(cfg.r, cfg.R, cfg.p);
    const fs::path csv_path = fs::path(cfg.out_dir) / ("profile_" + tag + ".csv");
    const fs::path json_path = fs::path(cfg.out_dir) / ("report_" + tag + ".json");
    {
        std::ofstream os(csv_path);
        if (!os) throw data_error("cannot open " + csv_path.string());
        io::write_profile_csv(os, m);
    }
    {
        std::ofstream os(json_path);
        if (!os) throw data_error("cannot open " + json_path.string());
        os << io::energy_report_json(report) << "\n";
    }
    std::cout << "regime: " << minimizer::regime_name(m.regime) << "\n"
              << (m.regime == minimizer::Regime::closed_form_p1
                      ? "b = "
                      : (m.regime == minimizer::Regime::power_p2 ? "alpha = " : "tau = "))
              << io::fmt(m.b_or_tau) << "\n"
              << "c = " << io::fmt(m.c) << "\n"
              << "energy = " << io::fmt(report.energy) << "\n"
              << "energy / 2pi = " << io::fmt(report.energy / (2.0 * std::numbers::pi)) << "\n"
              << "lower_bound = " << io::fmt(report.lower_bound) << "\n"
              << "profile: " << csv_path.string() << "\n"
              << "report: " << json_path.string() << "\n";
    if (m.boundary_case)
        std::cout << "boundary-case: p = 1 sits exactly on the existence threshold (b = 1)\n";
    return kExitOk;
}

int cmd_threshold(const RunConfig& cfg) {
    if (!(cfg.r > 1.0)) throw domain_error("--r must be > 1");
    std::cout << "R0(r) = " << io::fmt(minimizer::p1_threshold(cfg.r)) << "\n"
              << "log R0(r) = " << io::fmt(minimizer::p1_modulus_bound(cfg.r)) << "\n";
    return kExitOk;
}

int cmd_plot(const RunConfig& cfg) {
    validate_point(cfg);
    const auto m = build_from(cfg);
    fs::create_directories(cfg.out_dir);
    const fs::path svg_path =
        fs::path(cfg.out_dir) / ("profile_" + point_tag(cfg.r, cfg.R, cfg.p) + ".svg");
    std::ofstream os(svg_path);
    if (!os) throw data_error("cannot open " + svg_path.string());
    const double dev = io::write_profile_svg(os, m);
    std::cout << "plot: " << svg_path.string() << "\n"
              << "max_abs_deviation = " << io::fmt(dev) << "\n";
    return kExitOk;
}

int cmd_energy(const RunConfig& cfg) {
    if (!cfg.map_file.empty()) {
        std::ifstream is(cfg.map_file);
        if (!is) throw data_error("cannot open map file " + cfg.map_file);
        const auto m = io::read_map_csv(is);
        energy::EnergyReport rep;
        rep.energy = energy::grid_energy(m, geometry::Exponent(cfg.p));
        rep.nt = m.nt();
        rep.ntheta = m.ntheta();
        std::cout << io::energy_report_json(rep) << "\n";
        return kExitOk;
    }
    validate_point(cfg);
    const auto m = build_from(cfg);
    auto rep = energy::make_report(m, cfg.quad_tol);
    std::cout << io::energy_report_json(rep) << "\n";
    return kExitOk;
}

struct InvariantRow {
    std::string name;
    double worst;
    double tolerance;
    bool pass;
};

int cmd_verify(const RunConfig& cfg, bool point_given) {
    std::vector<std::array<double, 3>> points;
    if (point_given) {
        validate_point(cfg);
        points.push_back({cfg.r, cfg.R, cfg.p});
    } else {
        for (double r : {1.5, 2.0})
            for (double R : {1.5, 2.0})
                for (double p : {1.0, 1.5, 2.0}) points.push_back({r, R, p});
    }

    std::vector<InvariantRow> rows;
    std::vector<verify::TrialResult> all_trials;
    const auto record = [&](const std::string& name, double worst, double tol) {
        rows.push_back({name, worst, tol, worst <= tol});
    };

    double worst_boundary = 0.0, worst_pdev = 0.0, worst_res = 0.0, worst_lb = 0.0;
    double worst_sym = 0.0, worst_gap = 0.0, worst_ang = 0.0, worst_rad = 0.0;
    for (const auto& [r, R, p] : points) {
        RunConfig pt = cfg;
        pt.r = r;
        pt.R = R;
        pt.p = p;
        const auto m = build_from(pt);
        const auto rep = energy::make_report(m, cfg.quad_tol);
        worst_boundary = std::max({worst_boundary, std::abs(m.table.H.front() - 1.0),
                                   std::abs(m.table.H.back() - R)});
        double pdev = rep.p_const_dev;
        if (cfg.negative_control == "gshift") {
            minimizer::RadialProfile shifted = m.table;
            for (auto& g : shifted.g) g = std::min(g + 0.01, 1.0 - 1e-12);
            pdev = energy::p_const_deviation(shifted, m.c);
        }
        worst_pdev = std::max(worst_pdev, pdev);
        worst_res = std::max(worst_res, rep.el_residual);
        worst_lb = std::max(worst_lb, std::abs(rep.gap) / rep.energy);
        const auto sym = verify::symmetry_suite(m, std::min<std::size_t>(cfg.nt, 256),
                                                std::min<std::size_t>(cfg.ntheta, 256));
        worst_sym = std::max(worst_sym, sym.max_violation());
        const auto trials =
            verify::run_trials(m, cfg.trials, cfg.seed, cfg.nt, cfg.ntheta);
        const double log_R = std::log(R);
        for (const auto& t : trials) {
            worst_gap = std::max(worst_gap, -t.gap / m.energy);
            worst_ang = std::max(worst_ang, 2.0 * std::numbers::pi - t.min_angular);
            worst_rad = std::max(worst_rad, log_R - t.min_radial);
        }
        all_trials.insert(all_trials.end(), trials.begin(), trials.end());
    }
    record("boundary", worst_boundary, 1e-8);
    record("p-constancy", worst_pdev, 1e-7);
    record("el-residual", worst_res, 1e-6);
    record("lower-bound", worst_lb, 1e-6);
    record("symmetry", worst_sym, 1e-6);
    record("minimality", worst_gap, 1e-4);
    record("provo-angular", worst_ang, 1e-3);
    record("provo-radial", worst_rad, 1e-3);

    fs::create_directories(cfg.out_dir);
    const fs::path json_path = fs::path(cfg.out_dir) / "verify_report.json";
    {
        std::ofstream os(json_path);
        if (!os) throw data_error("cannot open " + json_path.string());
        os << "{\n  \"invariants\": [";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) os << ",";
            os << "\n    {\"name\": \"" << rows[i].name << "\", \"worst\": "
               << io::fmt(rows[i].worst) << ", \"tolerance\": " << io::fmt(rows[i].tolerance)
               << ", \"pass\": " << (rows[i].pass ? "true" : "false") << "}";
        }
        os << "\n  ],\n  \"trials\": " << io::trials_json(all_trials) << "\n}\n";
    }

    const InvariantRow* first_fail = nullptr;
    for (const auto& row : rows) {
        std::cout << (row.pass ? "PASS " : "FAIL ") << row.name
                  << " (worst = " << io::fmt(row.worst)
                  << ", tolerance = " << io::fmt(row.tolerance) << ")\n";
        if (!row.pass && !first_fail) first_fail = &row;
    }
    std::cout << "report: " << json_path.string() << "\n";
    if (first_fail) {
        std::cout << "first failing invariant: " << first_fail->name << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

struct SweepRow {
    double r, R, p;
    std::string status;  // ok | nonexistent | failed
    std::string regime;
    double param = 0.0, c = 0.0, energy = 0.0, lower_bound = 0.0, gap = 0.0;
    double p_const_dev = 0.0, el_residual = 0.0;
    std::string note;
};

int cmd_sweep(const RunConfig& cfg) {
    const std::vector<double> rs =
        cfg.r_list.empty() ? std::vector<double>{1.5, 2.0, 4.0} : parse_list(cfg.r_list);
    const std::vector<double> Rs =
        cfg.R_list.empty() ? std::vector<double>{1.5, 2.0, 4.0} : parse_list(cfg.R_list);
    const std::vector<double> ps =
        cfg.p_list.empty() ? std::vector<double>{1.0, 1.25, 1.5, 1.75, 2.0}
                           : parse_list(cfg.p_list);

    std::vector<SweepRow> rows;
    for (double r : rs)
        for (double R : Rs)
            for (double p : ps) rows.push_back({r, R, p, "", "", 0, 0, 0, 0, 0, 0, 0, ""});

    const auto solve_row = [&](SweepRow& row) {
        try {
            const auto m = minimizer::build_minimizer(row.r, row.R, geometry::Exponent(row.p),
                                                      cfg.nodes, cfg.build_tol);
            const auto rep = energy::make_report(m, cfg.quad_tol);
            row.status = "ok";
            row.regime = minimizer::regime_name(m.regime);
            row.param = m.b_or_tau;
            row.c = m.c;
            row.energy = rep.energy;
            row.lower_bound = rep.lower_bound;
            row.gap = rep.gap;
            row.p_const_dev = rep.p_const_dev;
            row.el_residual = rep.el_residual;
            if (m.boundary_case) row.note = "boundary-case";
        } catch (const nonexistence_error& e) {
            row.status = "nonexistent";
            row.note = "threshold R0 = " + io::fmt(e.threshold);
        } catch (const std::exception& e) {
            row.status = "failed";
            row.note = e.what();
        }
    };

    // parameter points are independent; run them concurrently
    std::vector<std::future<void>> futures;
    futures.reserve(rows.size());
    for (auto& row : rows)
        futures.push_back(std::async(std::launch::async, [&row, &solve_row] { solve_row(row); }));
    for (auto& f : futures) f.get();

    fs::create_directories(cfg.out_dir);
    const bool json = cfg.format == "json";
    const fs::path path =
        fs::path(cfg.out_dir) / (json ? "sweep_summary.json" : "sweep_summary.csv");
    std::ofstream os(path);
    if (!os) throw data_error("cannot open " + path.string());
    if (json) {
        os << "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& w = rows[i];
            if (i) os << ",";
            os << "\n  {\"r\": " << io::fmt(w.r) << ", \"R\": " << io::fmt(w.R)
               << ", \"p\": " << io::fmt(w.p) << ", \"status\": \"" << w.status
               << "\", \"regime\": \"" << w.regime << "\", \"param\": " << io::fmt(w.param)
               << ", \"c\": " << io::fmt(w.c) << ", \"energy\": " << io::fmt(w.energy)
               << ", \"lower_bound\": " << io::fmt(w.lower_bound)
               << ", \"gap\": " << io::fmt(w.gap)
               << ", \"p_const_dev\": " << io::fmt(w.p_const_dev)
               << ", \"el_residual\": " << io::fmt(w.el_residual) << ", \"note\": \""
               << w.note << "\"}";
        }
        os << "\n]\n";
    } else {
        os << "r,R,p,status,regime,param,c,energy,lower_bound,gap,p_const_dev,el_residual,"
              "note\n";
        for (const auto& w : rows)
            os << io::fmt(w.r) << ',' << io::fmt(w.R) << ',' << io::fmt(w.p) << ','
               << w.status << ',' << w.regime << ',' << io::fmt(w.param) << ','
               << io::fmt(w.c) << ',' << io::fmt(w.energy) << ',' << io::fmt(w.lower_bound)
               << ',' << io::fmt(w.gap) << ',' << io::fmt(w.p_const_dev) << ','
               << io::fmt(w.el_residual) << ',' << w.note << '\n';
    }
    std::size_t failures = 0;
    for (const auto& w : rows)
        if (w.status == "failed") ++failures;
    std::cout << "sweep: " << rows.size() << " points, " << failures << " failures, summary "
              << path.string() << "\n";
    return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radial minimizers of the weighted p-Dirichlet energy between annuli"};
    app.require_subcommand(1);

    RunConfig cfg;

    const auto add_point_opts = [&](CLI::App* sub, bool with_grid) {
        sub->add_option("--r", cfg.r, "domain outer radius (> 1)");
        sub->add_option("--R", cfg.R, "target outer radius (> 1)");
        sub->add_option("--p", cfg.p, "exponent in [1, 2]");
        sub->add_option("--nodes", cfg.nodes, "profile table nodes");
        sub->add_option("--out", cfg.out_dir, "output directory");
        if (with_grid) {
            sub->add_option("--nt", cfg.nt, "radial grid resolution");
            sub->add_option("--ntheta", cfg.ntheta, "angular grid resolution");
        }
    };

    auto* solve = app.add_subcommand("solve", "build the minimizer; write profile CSV + report JSON");
    add_point_opts(solve, false);
    auto* energy_cmd = app.add_subcommand("energy", "energy report for a solve or a sampled map CSV");
    add_point_opts(energy_cmd, true);
    energy_cmd->add_option("--map", cfg.map_file, "PolarGridMap CSV to evaluate instead of solving");
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite; exit 0 iff all pass");
    add_point_opts(verify_cmd, true);
    verify_cmd->add_option("--seed", cfg.seed, "base seed for the perturbation trials");
    verify_cmd->add_option("--trials", cfg.trials, "perturbation trials per parameter point");
    verify_cmd->add_option("--negative-control", cfg.negative_control,
                           "inject a fault: none | gshift");
    auto* threshold = app.add_subcommand("threshold", "p = 1 existence threshold R0(r)");
    threshold->add_option("--r", cfg.r, "domain outer radius (> 1)");
    auto* sweep = app.add_subcommand("sweep", "solve a parameter grid; write a summary table");
    sweep->add_option("--r-list", cfg.r_list, "comma separated r values");
    sweep->add_option("--R-list", cfg.R_list, "comma separated R values");
    sweep->add_option("--p-list", cfg.p_list, "comma separated p values");
    sweep->add_option("--nodes", cfg.nodes, "profile table nodes");
    sweep->add_option("--out", cfg.out_dir, "output directory");
    sweep->add_option("--format", cfg.format, "summary format: csv | json");
    auto* plot = app.add_subcommand("plot", "SVG of H(t) against the identity line");
    add_point_opts(plot, false);

    CLI11_PARSE(app, argc, argv);

    try {
        apply_env_quad_tol(cfg);
        if (solve->parsed()) return cmd_solve(cfg);
        if (energy_cmd->parsed()) return cmd_energy(cfg);
        if (verify_cmd->parsed())
            return cmd_verify(cfg, verify_cmd->count("--r") || verify_cmd->count("--R") ||
                                       verify_cmd->count("--p"));
        if (threshold->parsed()) return cmd_threshold(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (plot->parsed()) return cmd_plot(cfg);
    } catch (const nonexistence_error& e) {
        std::cout << "nonexistence: " << e.what() << "\n"
                  << "threshold R0 = " << io::fmt(e.threshold) << "\n";
        return kExitNonexistence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
