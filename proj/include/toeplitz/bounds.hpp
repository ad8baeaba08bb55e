#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toeplitz/phi_catalog.hpp"

namespace toeplitz {

enum class ClassKind { starlike, convex };

inline std::string_view to_string(ClassKind k) { return k == ClassKind::starlike ? "starlike" : "convex"; }

/// Weight mu of the Fekete-Szego functional |a3 - mu a2^2|.
struct FSQuery {
    double mu;
};

/// A closed-form bound on |T2(2)| or |T3(1)|. `value` is always the closed
/// form; it is a proven sharp bound only when `hypothesis_ok` holds.
struct ToeplitzBound {
    double value = 0;
    bool hypothesis_ok = false;
    std::vector<std::string> notes;

    bool sharp() const noexcept { return hypothesis_ok; }
};

struct BoundReport {
    ClassKind kind = ClassKind::starlike;
    double b1 = 0;
    double b2 = 0;
    double a2_bound = 0;
    double a3_bound = 0;
    ToeplitzBound t22;
    ToeplitzBound t31;
    std::vector<std::string> notes;
};

// Slack toward acceptance in hypothesis comparisons; every hypothesis admits equality.
inline constexpr double hypothesis_slack = 1e-12;

namespace detail {

inline void require_positive_b1(double b1, const char* op) {
    if (!(b1 > 0)) throw std::domain_error(std::string(op) + ": B1 > 0 required");
}

inline std::string fmt_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace detail

/// Sharp bound on |a3 - mu a2^2| over the class: the three-branch piecewise
/// formula, with thresholds 2 B1^2 mu (starlike) or 3 B1^2 mu (convex)
/// compared against B2 + B1^2 -/+ B1 (doubled for convex).
inline double fekete_szego(ClassKind kind, double b1, double b2, FSQuery q) {
    detail::require_positive_b1(b1, "fekete_szego");
    const double s = b2 + b1 * b1;
    const double mu = q.mu;
    if (kind == ClassKind::starlike) {
        const double x = 2 * b1 * b1 * mu;
        if (x <= s - b1) return 0.5 * (s - 2 * mu * b1 * b1);
        if (x <= s + b1) return 0.5 * b1;
        return 0.5 * (-s + 2 * mu * b1 * b1);
    }
    const double x = 3 * b1 * b1 * mu;
    if (x <= 2 * (s - b1)) return (b2 - 1.5 * mu * b1 * b1 + b1 * b1) / 6;
    if (x <= 2 * (s + b1)) return b1 / 6;
    return (-b2 + 1.5 * mu * b1 * b1 - b1 * b1) / 6;
}

inline double a2_bound(ClassKind kind, double b1) {
    detail::require_positive_b1(b1, "a2_bound");
    return kind == ClassKind::starlike ? b1 : b1 / 2;
}

inline double a3_bound(ClassKind kind, double b1, double b2) { return fekete_szego(kind, b1, b2, {0.0}); }

/// |T2(2)| = |a3^2 - a2^2|, sharp when 0 < B1 <= |B2 + B1^2|.
inline ToeplitzBound t22_bound(ClassKind kind, double b1, double b2) {
    detail::require_positive_b1(b1, "t22_bound");
    const double s = b2 + b1 * b1;
    ToeplitzBound r;
    r.value = kind == ClassKind::starlike ? s * s / 4 + b1 * b1 : s * s / 36 + b1 * b1 / 4;
    r.hypothesis_ok = b1 <= std::abs(s) + hypothesis_slack;
    if (!r.hypothesis_ok) {
        r.notes.push_back("T2(2): hypothesis B1 <= |B2 + B1^2| fails (B1 = " + detail::fmt_num(b1) +
                          ", |B2 + B1^2| = " + detail::fmt_num(std::abs(s)) + "); value is an estimate only (open case)");
    }
    return r;
}

/// |T3(1)| = |1 - 2 a2^2 - a3 (a3 - 2 a2^2)|, sharp when
/// B1 - B1^2 <= B2 <= 3 B1^2 - B1 (starlike) or <= 2 B1^2 - B1 (convex).
inline ToeplitzBound t31_bound(ClassKind kind, double b1, double b2) {
    detail::require_positive_b1(b1, "t31_bound");
    const double sq = b1 * b1;
    const double s = b2 + sq;
    const bool starlike = kind == ClassKind::starlike;
    const double upper = (starlike ? 3 * sq : 2 * sq) - b1;
    const double lower = b1 - sq;

    ToeplitzBound r;
    r.value = starlike ? 1 + 2 * sq + s * (3 * sq - b2) / 4 : 1 + sq / 2 + s * (2 * sq - b2) / 36;
    const bool lower_ok = lower <= b2 + hypothesis_slack;
    const bool upper_ok = b2 <= upper + hypothesis_slack;
    r.hypothesis_ok = lower_ok && upper_ok;
    if (!lower_ok) {
        r.notes.push_back("T3(1): hypothesis B1 - B1^2 <= B2 fails (B1 - B1^2 = " + detail::fmt_num(lower) +
                          ", B2 = " + detail::fmt_num(b2) + ")");
    }
    if (!upper_ok) {
        r.notes.push_back(std::string("T3(1): hypothesis B2 <= ") + (starlike ? "3" : "2") +
                          " B1^2 - B1 fails (B2 = " + detail::fmt_num(b2) + ", bound = " + detail::fmt_num(upper) +
                          ")");
    }
    return r;
}

/// All bounds for one (φ, class) pair. Throws spec_error for inadmissible φ
/// or complex B1, B2.
inline BoundReport full_report(const PhiSpec& spec, ClassKind kind) {
    const Admissibility adm = validate(spec);
    if (!adm.ok()) {
        std::string msg = spec.label() + ": inadmissible:";
        for (const auto& v : adm.violations) msg += " " + v + ";";
        throw spec_error(msg);
    }
    const BCoeffs b = b_coeffs(spec);

    BoundReport r;
    r.kind = kind;
    r.b1 = b.b1;
    r.b2 = b.b2;
    r.a2_bound = a2_bound(kind, b.b1);
    r.a3_bound = a3_bound(kind, b.b1, b.b2);
    r.t22 = t22_bound(kind, b.b1, b.b2);
    r.t31 = t31_bound(kind, b.b1, b.b2);
    r.notes.insert(r.notes.end(), r.t22.notes.begin(), r.t22.notes.end());
    r.notes.insert(r.notes.end(), r.t31.notes.begin(), r.t31.notes.end());

    if (kind == ClassKind::convex && spec.is<phi::Janowski>()) {
        // In (A, B) the coefficient range reads A - 2B >= 1 and B <= 2A - 1.
        const auto& j = std::get<phi::Janowski>(spec.get());
        r.notes.push_back("T3(1) janowski convex: range used is A - 2B >= 1 and B <= 2A - 1 (A - 2B = " +
                          detail::fmt_num(j.A - 2 * j.B) + ", 2A - 1 = " + detail::fmt_num(2 * j.A - 1) +
                          "); the condition A + B >= 0, B <= (A - 1)/2 is not equivalent");
    }
    return r;
}

}  // namespace toeplitz
