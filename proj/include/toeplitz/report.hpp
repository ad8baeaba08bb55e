#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string_view>
#include <tuple>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "toeplitz/bounds.hpp"
#include "toeplitz/extremal.hpp"
#include "toeplitz/oracle.hpp"
#include "toeplitz/phi_catalog.hpp"

namespace toeplitz::report {

using json = nlohmann::ordered_json;

/// 17 significant digits ("%.17g"); negative zero is written as 0.
inline std::string format_double(double x) {
    if (x == 0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline void write_json(std::ostringstream& os, const json& j, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad << json(it.key()).dump() << ": ";
                write_json(os, it.value(), indent, depth + 1);
            }
            os << "\n" << close_pad << "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) os << ",\n";
                first = false;
                os << pad;
                write_json(os, v, indent, depth + 1);
            }
            os << "\n" << close_pad << "]";
            return;
        }
        case json::value_t::number_float: os << format_double(j.get<double>()); return;
        default: os << j.dump(); return;
    }
}

}  // namespace detail

/// Stable rendering: insertion-ordered keys, two-space indent, floats at 17
/// significant digits. Parsing the output and rendering again is byte-identical.
inline std::string render_json(const json& j) {
    std::ostringstream os;
    detail::write_json(os, j, 2, 0);
    os << "\n";
    return os.str();
}

inline json params_json(const PhiSpec& spec) {
    json p = json::object();
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, phi::Janowski>) {
                p["A"] = v.A;
                p["B"] = v.B;
            } else if constexpr (std::is_same_v<T, phi::OrderAlpha> || std::is_same_v<T, phi::AlphaExponential>) {
                p["alpha"] = v.alpha;
            } else if constexpr (std::is_same_v<T, phi::Custom>) {
                p["b1"] = v.series.order() >= 1 ? v.series[1].real() : 0.0;
                p["b2"] = v.series.order() >= 2 ? v.series[2].real() : 0.0;
            }
        },
        spec.get());
    return p;
}

inline json bound_json(const ToeplitzBound& b) {
    return json{{"value", b.value}, {"hypothesis_ok", b.hypothesis_ok}, {"sharp", b.sharp()}};
}

inline json point_json(const SchwarzPoint& p) {
    return json{{"w1", json::array({p.w1.real(), p.w1.imag()})}, {"w2", json::array({p.w2.real(), p.w2.imag()})}};
}

inline json oracle_json(const OracleResult& r, bool estimate_only) {
    return json{{"sup_estimate", r.sup_estimate},
                {"argmax", point_json(r.argmax)},
                {"samples", r.samples},
                {"seed", r.seed},
                {"polish_steps", r.polish_steps},
                {"estimate_only", estimate_only}};
}

/// Report object: {class, params, kind, b1, b2, a2_bound, a3_bound, t22, t31, oracle?, notes}.
/// `oracle` holds results for t22 and/or t31, keyed by functional name.
inline json report_json(const PhiSpec& spec, const BoundReport& r, const std::vector<OracleResult>& oracle = {}) {
    json j{{"class", spec.class_name()},
           {"params", params_json(spec)},
           {"kind", std::string(to_string(r.kind))},
           {"b1", r.b1},
           {"b2", r.b2},
           {"a2_bound", r.a2_bound},
           {"a3_bound", r.a3_bound},
           {"t22", bound_json(r.t22)},
           {"t31", bound_json(r.t31)}};
    if (!oracle.empty()) {
        json o = json::object();
        for (const auto& res : oracle) {
            bool open = false;
            if (res.functional.kind == FunctionalKind::t22) open = !r.t22.hypothesis_ok;
            if (res.functional.kind == FunctionalKind::t31) open = !r.t31.hypothesis_ok;
            o[res.functional.name()] = oracle_json(res, open);
        }
        j["oracle"] = std::move(o);
    }
    j["notes"] = r.notes;
    return j;
}

// -- CSV ---------------------------------------------------------------------

inline std::string csv_header() { return "class,kind,B1,B2,T22_ok,T22,T31_ok,T31\n"; }

inline std::string csv_row(const PhiSpec& spec, const BoundReport& r) {
    std::string row = spec.label();
    row += ",";
    row += to_string(r.kind);
    for (const auto& cell : {format_double(r.b1), format_double(r.b2), std::string(r.t22.hypothesis_ok ? "true" : "false"),
                             format_double(r.t22.value), std::string(r.t31.hypothesis_ok ? "true" : "false"),
                             format_double(r.t31.value)}) {
        row += "," + cell;
    }
    return row + "\n";
}

// -- Special-case table --------------------------------------------------------

/// Families of the special-case table, in display order.
inline std::vector<PhiSpec> table_specs() {
    return {PhiSpec::janowski(1, -1), PhiSpec::exponential(0), PhiSpec::cardioid(), PhiSpec::sine(),
            PhiSpec::lune(),          PhiSpec::parabolic(),    PhiSpec::limacon(),  PhiSpec::nephroid()};
}

struct TableRow {
    PhiSpec spec;
    BoundReport report;
};

inline std::vector<TableRow> table_rows() {
    std::vector<TableRow> rows;
    for (const auto& s : table_specs()) {
        for (const auto kind : {ClassKind::starlike, ClassKind::convex}) rows.push_back({s, full_report(s, kind)});
    }
    return rows;
}

inline std::string render_table_csv() {
    std::string out = csv_header();
    for (const auto& row : table_rows()) out += csv_row(row.spec, row.report);
    return out;
}

inline std::string render_table_json() {
    json arr = json::array();
    for (const auto& row : table_rows()) arr.push_back(report_json(row.spec, row.report));
    return render_json(arr);
}

// -- Verification ------------------------------------------------------------

enum class VerifyStatus { pass, fail, estimate };

inline std::string_view to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "PASS";
        case VerifyStatus::fail: return "FAIL";
        default: return "estimate only (open case)";
    }
}

struct VerifyLine {
    Functional functional;
    ToeplitzBound bound;
    double extremal = 0;  // |T| at the extremal function
    OracleResult oracle;
    VerifyStatus status = VerifyStatus::fail;
};

struct VerifySummary {
    BoundReport report;
    double residual = 0;
    bool residual_ok = false;
    std::vector<VerifyLine> lines;

    bool all_pass() const {
        if (!residual_ok) return false;
        for (const auto& l : lines)
            if (l.status == VerifyStatus::fail) return false;
        return true;
    }
    bool any_open() const {
        for (const auto& l : lines)
            if (l.status == VerifyStatus::estimate) return true;
        return false;
    }
};

// Sharpness and soundness tolerances for verification.
inline constexpr double extremal_tol = 1e-9;
inline constexpr double soundness_tol = 1e-9;
inline constexpr double residual_tol = 1e-10;

/// Checks each Toeplitz bound three ways: the closed form, the extremal
/// function's value, and the oracle's empirical supremum. Bounds whose
/// hypothesis fails are reported as estimates and never pass or fail.
inline VerifySummary run_verification(const PhiSpec& spec, ClassKind kind, std::size_t order, const OracleConfig& cfg) {
    VerifySummary out;
    out.report = full_report(spec, kind);
    const ExtremalFunction ef = extremal(spec, kind, order);
    out.residual = residual(ef, spec);
    out.residual_ok = out.residual <= residual_tol;

    const auto& r = out.report;
    for (const auto& [fn, bound, value] : {std::tuple{Functional::t22(), r.t22, std::abs(ef.t22_value)},
                                           std::tuple{Functional::t31(), r.t31, std::abs(ef.t31_value)}}) {
        VerifyLine line{fn, bound, value, maximize(kind, r.b1, r.b2, fn, cfg)};
        if (!bound.hypothesis_ok) {
            line.status = VerifyStatus::estimate;
        } else {
            const bool sharp = std::abs(value - bound.value) <= extremal_tol;
            const double sup = line.oracle.sup_estimate;
            const bool sound = sup <= bound.value + soundness_tol;
            const bool reached = sup >= bound.value - cfg.tol;
            line.status = sharp && sound && reached ? VerifyStatus::pass : VerifyStatus::fail;
        }
        out.lines.push_back(std::move(line));
    }
    return out;
}

inline std::vector<OracleResult> oracle_results(const VerifySummary& v) {
    std::vector<OracleResult> o;
    for (const auto& l : v.lines) o.push_back(l.oracle);
    return o;
}

// -- Human-readable output -----------------------------------------------------

inline std::string fmt(double x, const char* f = "%.9g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

inline std::string render_human(const PhiSpec& spec, const BoundReport& r) {
    std::ostringstream os;
    os << spec.label() << " " << to_string(r.kind) << "\n"
       << "  B1 = " << fmt(r.b1) << ", B2 = " << fmt(r.b2) << "\n"
       << "  |a2| <= " << fmt(r.a2_bound) << "\n"
       << "  |a3| <= " << fmt(r.a3_bound) << "\n";
    auto line = [&](const char* name, const ToeplitzBound& b) {
        os << "  " << name << " = " << fmt(b.value);
        if (b.hypothesis_ok) {
            os << " (sharp)\n";
        } else {
            os << " (hypothesis not satisfied; estimate only)\n";
        }
    };
    line("t22", r.t22);
    line("t31", r.t31);
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

inline std::string render_verify(const PhiSpec& spec, const VerifySummary& v) {
    std::ostringstream os;
    os << spec.label() << " " << to_string(v.report.kind) << "\n";
    os << "  residual: " << fmt(v.residual, "%.3g") << (v.residual_ok ? " PASS" : " FAIL") << "\n";
    for (const auto& l : v.lines) {
        os << "  " << l.functional.name() << ": " << (l.bound.hypothesis_ok ? "bound " : "formula ")
           << fmt(l.bound.value) << ", extremal " << fmt(l.extremal) << ", oracle " << fmt(l.oracle.sup_estimate)
           << ", " << to_string(l.status) << "\n";
    }
    os << (v.all_pass() ? "overall: PASS" : "overall: FAIL") << "\n";
    return os.str();
}

}  // namespace toeplitz::report
