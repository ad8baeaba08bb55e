// toeplitz: sharp Toeplitz-determinant bounds for Ma-Minda classes.
//
//   toeplitz bounds   --class sine --kind starlike
//   toeplitz extremal --class cardioid --kind convex --order 10
//   toeplitz verify   --class exp --alpha 0 --kind starlike --samples 200000 --seed 7
//   toeplitz fs       --class lune --kind both --mu 0.5
//   toeplitz table    --format csv
//
// Exit codes: 0 success, 1 usage or spec error, 2 hypothesis failure under
// --strict, 3 verification failure.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toeplitz/toeplitz.hpp"

namespace {

using namespace toeplitz;
namespace rep = toeplitz::report;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_strict = 2;
constexpr int exit_verify_failed = 3;

struct Options {
    std::string cls = "janowski";
    double A = 1;
    double B = -1;
    double alpha = 0;
    double b1 = 1;
    double b2 = 0;
    std::string kind = "starlike";
    std::size_t order = 10;
    std::size_t samples = 200000;
    std::uint64_t seed = 7;
    std::size_t polish_steps = 40;
    double tol = 1e-3;
    double mu = 0;
    std::string format = "human";
    bool strict = false;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TOEPLITZ_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric TOEPLITZ_SEED\n";
        }
    }
    return 7;
}

PhiSpec make_spec(const Options& o) {
    if (o.cls == "janowski") return PhiSpec::janowski(o.A, o.B);
    if (o.cls == "order-alpha") return PhiSpec::order_alpha(o.alpha);
    if (o.cls == "exp") return PhiSpec::exponential(o.alpha);
    if (o.cls == "cardioid") return PhiSpec::cardioid();
    if (o.cls == "sine") return PhiSpec::sine();
    if (o.cls == "lune") return PhiSpec::lune();
    if (o.cls == "parabolic") return PhiSpec::parabolic();
    if (o.cls == "limacon") return PhiSpec::limacon();
    if (o.cls == "nephroid") return PhiSpec::nephroid();
    return PhiSpec::custom(o.b1, o.b2);
}

std::vector<ClassKind> kinds(const Options& o) {
    if (o.kind == "starlike") return {ClassKind::starlike};
    if (o.kind == "convex") return {ClassKind::convex};
    return {ClassKind::starlike, ClassKind::convex};
}

OracleConfig oracle_config(const Options& o) {
    OracleConfig cfg;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.polish_steps = o.polish_steps;
    cfg.tol = o.tol;
    return cfg;
}

void add_spec_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--class", o.cls, "Target function family")
        ->check(CLI::IsMember({"janowski", "order-alpha", "exp", "cardioid", "sine", "lune", "parabolic", "limacon",
                               "nephroid", "custom"}));
    cmd->add_option("--A", o.A, "Janowski A");
    cmd->add_option("--B", o.B, "Janowski B");
    cmd->add_option("--alpha", o.alpha, "alpha for order-alpha / exp");
    cmd->add_option("--b1", o.b1, "custom B1");
    cmd->add_option("--b2", o.b2, "custom B2");
    cmd->add_option("--kind", o.kind, "starlike, convex or both")->check(CLI::IsMember({"starlike", "convex", "both"}));
    cmd->add_option("--order", o.order, "Truncation order")->check(CLI::Range(3, 200));
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_flag("--strict", o.strict, "Exit 2 if any bound hypothesis fails");
}

void add_oracle_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--samples", o.samples, "Oracle sample budget")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Oracle seed (default: $TOEPLITZ_SEED or 7)");
    cmd->add_option("--polish-steps", o.polish_steps, "Coordinate-ascent steps per start");
    cmd->add_option("--tol", o.tol, "Oracle pass tolerance")->check(CLI::NonNegativeNumber);
}

void emit_json(const rep::json& items) {
    std::cout << rep::render_json(items.size() == 1 ? items.front() : items);
}

int run_bounds(const Options& o) {
    const PhiSpec spec = make_spec(o);
    bool all_ok = true;
    rep::json items = rep::json::array();
    std::string csv = rep::csv_header();
    for (const auto k : kinds(o)) {
        const BoundReport r = full_report(spec, k);
        all_ok = all_ok && r.t22.hypothesis_ok && r.t31.hypothesis_ok;
        if (o.format == "json") items.push_back(rep::report_json(spec, r));
        else if (o.format == "csv") csv += rep::csv_row(spec, r);
        else std::cout << rep::render_human(spec, r);
    }
    if (o.format == "json") emit_json(items);
    if (o.format == "csv") std::cout << csv;
    return o.strict && !all_ok ? exit_strict : exit_ok;
}

int run_extremal(const Options& o) {
    const PhiSpec spec = make_spec(o);
    rep::json items = rep::json::array();
    for (const auto k : kinds(o)) {
        const ExtremalFunction ef = extremal(spec, k, o.order);
        const double res = residual(ef, spec);
        if (o.format == "json") {
            rep::json coeffs = rep::json::array();
            for (std::size_t n = 1; n <= ef.f.order(); ++n) coeffs.push_back({ef.f[n].real(), ef.f[n].imag()});
            items.push_back(rep::json{{"class", spec.class_name()},
                                      {"params", rep::params_json(spec)},
                                      {"kind", std::string(to_string(k))},
                                      {"coeffs", coeffs},
                                      {"t22_value", {ef.t22_value.real(), ef.t22_value.imag()}},
                                      {"t31_value", {ef.t31_value.real(), ef.t31_value.imag()}},
                                      {"residual", res}});
        } else {
            std::cout << spec.label() << " " << to_string(k) << (k == ClassKind::starlike ? " (K_phi)" : " (H_phi)")
                      << "\n";
            for (std::size_t n = 1; n <= ef.f.order(); ++n) {
                std::cout << "  a" << n << " = " << rep::fmt(ef.f[n].real()) << " + " << rep::fmt(ef.f[n].imag())
                          << "i\n";
            }
            std::cout << "  |T2(2)| = " << rep::fmt(std::abs(ef.t22_value)) << "\n"
                      << "  |T3(1)| = " << rep::fmt(std::abs(ef.t31_value)) << "\n"
                      << "  residual = " << rep::fmt(res, "%.3g") << "\n";
        }
    }
    if (o.format == "json") emit_json(items);
    return exit_ok;
}

int run_verify(const Options& o) {
    const PhiSpec spec = make_spec(o);
    const OracleConfig cfg = oracle_config(o);
    bool all_pass = true;
    bool any_open = false;
    rep::json items = rep::json::array();
    for (const auto k : kinds(o)) {
        const rep::VerifySummary v = rep::run_verification(spec, k, o.order, cfg);
        all_pass = all_pass && v.all_pass();
        any_open = any_open || v.any_open();
        if (o.format == "json") {
            auto j = rep::report_json(spec, v.report, rep::oracle_results(v));
            j["residual"] = v.residual;
            j["pass"] = v.all_pass();
            items.push_back(std::move(j));
        } else {
            std::cout << rep::render_verify(spec, v);
        }
    }
    if (o.format == "json") emit_json(items);
    if (!all_pass) return exit_verify_failed;
    return o.strict && any_open ? exit_strict : exit_ok;
}

int run_fs(const Options& o) {
    const PhiSpec spec = make_spec(o);
    const BCoeffs b = b_coeffs(spec);
    const OracleConfig cfg = oracle_config(o);
    rep::json items = rep::json::array();
    for (const auto k : kinds(o)) {
        const double bound = fekete_szego(k, b.b1, b.b2, {o.mu});
        const OracleResult r = maximize(k, b.b1, b.b2, Functional::fs(o.mu), cfg);
        if (o.format == "json") {
            items.push_back(rep::json{{"class", spec.class_name()},
                                      {"params", rep::params_json(spec)},
                                      {"kind", std::string(to_string(k))},
                                      {"mu", o.mu},
                                      {"bound", bound},
                                      {"oracle", rep::oracle_json(r, false)}});
        } else {
            std::cout << spec.label() << " " << to_string(k) << ": |a3 - " << rep::fmt(o.mu) << " a2^2| <= "
                      << rep::fmt(bound) << " (oracle " << rep::fmt(r.sup_estimate) << ")\n";
        }
    }
    if (o.format == "json") emit_json(items);
    return exit_ok;
}

int run_table(const Options& o) {
    if (o.format == "json") {
        std::cout << rep::render_table_json();
    } else if (o.format == "csv") {
        std::cout << rep::render_table_csv();
    } else {
        for (const auto& row : rep::table_rows()) {
            std::printf("%-16s %-9s T22 %-14s%s  T31 %s%s\n", row.spec.label().c_str(),
                        std::string(to_string(row.report.kind)).c_str(), rep::fmt(row.report.t22.value).c_str(),
                        row.report.t22.hypothesis_ok ? "" : " (open)", rep::fmt(row.report.t31.value).c_str(),
                        row.report.t31.hypothesis_ok ? "" : " (open)");
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp Toeplitz-determinant bounds for Ma-Minda starlike and convex classes"};
    app.require_subcommand(1);
    Options o;
    o.seed = default_seed();

    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and hypothesis verdicts");
    auto* extremal_cmd = app.add_subcommand("extremal", "Coefficients of the extremal function");
    auto* verify = app.add_subcommand("verify", "Check bounds against extremal functions and the oracle");
    auto* fs = app.add_subcommand("fs", "Fekete-Szego bound with an oracle check");
    auto* table = app.add_subcommand("table", "Bounds for every special-case family");
    for (auto* cmd : {bounds, extremal_cmd, verify, fs}) add_spec_options(cmd, o);
    add_oracle_options(verify, o);
    add_oracle_options(fs, o);
    fs->add_option("--mu", o.mu, "Fekete-Szego weight");
    table->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
    o.format = "human";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (table->parsed() && table->count("--format") == 0) o.format = "csv";

    try {
        if (bounds->parsed()) return run_bounds(o);
        if (extremal_cmd->parsed()) return run_extremal(o);
        if (verify->parsed()) return run_verify(o);
        if (fs->parsed()) return run_fs(o);
        return run_table(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
