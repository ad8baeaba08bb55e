#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "toeplitz/series.hpp"

namespace toeplitz {

/// Raised for a φ that cannot be used (out-of-range parameters, inadmissible
/// custom series, complex leading coefficients where real ones are required).
class spec_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace phi {

/// (1 + A z) / (1 + B z), -1 <= B < A <= 1.
struct Janowski {
    double A;
    double B;
};
/// Janowski(1 - 2 alpha, -1), 0 <= alpha < 1.
struct OrderAlpha {
    double alpha;
};
/// alpha + (1 - alpha) e^z, 0 <= alpha < 1.
struct AlphaExponential {
    double alpha;
};
/// 1 + (4/3) z + (2/3) z^2
struct Cardioid {};
/// 1 + sin z
struct Sine {};
/// z + sqrt(1 + z^2)
struct Lune {};
/// 1 + (2/pi^2) (log((1 + sqrt z)/(1 - sqrt z)))^2
struct Parabolic {};
/// 1 + sqrt(2) z + z^2 / 2
struct Limacon {};
/// 1 + z - z^3 / 3
struct Nephroid {};
/// Any user-supplied expansion 1 + B1 z + B2 z^2 + ...
struct Custom {
    Series series;
};

}  // namespace phi

/// A Ma-Minda target function together with its parameters.
class PhiSpec {
public:
    using variant_type = std::variant<phi::Janowski, phi::OrderAlpha, phi::AlphaExponential, phi::Cardioid,
                                      phi::Sine, phi::Lune, phi::Parabolic, phi::Limacon, phi::Nephroid,
                                      phi::Custom>;

    PhiSpec(variant_type v) : v_(std::move(v)) {}

    static PhiSpec janowski(double A, double B) { return PhiSpec(phi::Janowski{A, B}); }
    static PhiSpec order_alpha(double alpha) { return PhiSpec(phi::OrderAlpha{alpha}); }
    static PhiSpec exponential(double alpha) { return PhiSpec(phi::AlphaExponential{alpha}); }
    static PhiSpec cardioid() { return PhiSpec(phi::Cardioid{}); }
    static PhiSpec sine() { return PhiSpec(phi::Sine{}); }
    static PhiSpec lune() { return PhiSpec(phi::Lune{}); }
    static PhiSpec parabolic() { return PhiSpec(phi::Parabolic{}); }
    static PhiSpec limacon() { return PhiSpec(phi::Limacon{}); }
    static PhiSpec nephroid() { return PhiSpec(phi::Nephroid{}); }
    static PhiSpec custom(Series s) { return PhiSpec(phi::Custom{std::move(s)}); }
    /// 1 + b1 z + b2 z^2
    static PhiSpec custom(std::complex<double> b1, std::complex<double> b2) {
        return PhiSpec(phi::Custom{Series({1.0, b1, b2}, 2)});
    }

    const variant_type& get() const noexcept { return v_; }

    template <typename T>
    bool is() const noexcept { return std::holds_alternative<T>(v_); }

    bool is_catalog() const noexcept { return !is<phi::Custom>(); }

    /// Family name as used on the command line.
    std::string class_name() const {
        return std::visit(
            [](const auto& p) -> std::string {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, phi::Janowski>) return "janowski";
                else if constexpr (std::is_same_v<T, phi::OrderAlpha>) return "order-alpha";
                else if constexpr (std::is_same_v<T, phi::AlphaExponential>) return "exp";
                else if constexpr (std::is_same_v<T, phi::Cardioid>) return "cardioid";
                else if constexpr (std::is_same_v<T, phi::Sine>) return "sine";
                else if constexpr (std::is_same_v<T, phi::Lune>) return "lune";
                else if constexpr (std::is_same_v<T, phi::Parabolic>) return "parabolic";
                else if constexpr (std::is_same_v<T, phi::Limacon>) return "limacon";
                else if constexpr (std::is_same_v<T, phi::Nephroid>) return "nephroid";
                else return "custom";
            },
            v_);
    }

    /// Name with parameters, e.g. "janowski(1;-1)" or "exp(0.25)".
    std::string label() const {
        auto num = [](double x) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", x);
            return std::string(buf);
        };
        return std::visit(
            [&](const auto& p) -> std::string {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, phi::Janowski>)
                    return class_name() + "(" + num(p.A) + ";" + num(p.B) + ")";
                else if constexpr (std::is_same_v<T, phi::OrderAlpha> || std::is_same_v<T, phi::AlphaExponential>)
                    return class_name() + "(" + num(p.alpha) + ")";
                else if constexpr (std::is_same_v<T, phi::Custom>)
                    return class_name() + "(" + num(p.series.order() >= 1 ? p.series[1].real() : 0.0) + ";" +
                           num(p.series.order() >= 2 ? p.series[2].real() : 0.0) + ")";
                else
                    return class_name();
            },
            v_);
    }

private:
    variant_type v_;
};

/// Admissibility verdict; empty `violations` means admissible.
struct Admissibility {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

struct BCoeffs {
    double b1;
    double b2;
};

namespace detail {

inline void parameter_violations(const PhiSpec& spec, std::vector<std::string>& out) {
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, phi::Janowski>) {
                if (!std::isfinite(p.A) || !std::isfinite(p.B)) {
                    out.emplace_back("A and B must be finite");
                    return;
                }
                if (!(p.B < p.A)) out.emplace_back("B < A required");
                if (p.A > 1) out.emplace_back("A <= 1 required");
                if (p.B < -1) out.emplace_back("B >= -1 required");
            } else if constexpr (std::is_same_v<T, phi::OrderAlpha> || std::is_same_v<T, phi::AlphaExponential>) {
                if (!(p.alpha >= 0 && p.alpha < 1)) out.emplace_back("0 <= alpha < 1 required");
            }
        },
        spec.get());
}

inline Series sine_series(std::size_t order) {
    std::vector<std::complex<double>> c(order + 1);
    c[0] = 1;
    double fact = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        fact *= static_cast<double>(n);
        if (n % 2 == 1) c[n] = ((n / 2) % 2 == 0 ? 1.0 : -1.0) / fact;
    }
    return Series(std::move(c));
}

// (8/pi^2) artanh(t)^2 with t^2 = z: build in t to order 2N, keep even terms.
inline Series parabolic_series(std::size_t order) {
    const std::size_t tn = 2 * order + 1;
    const Series one_plus_t({1.0, 1.0}, tn);
    const Series one_minus_t({1.0, -1.0}, tn);
    const Series artanh = scale(log(div(one_plus_t, one_minus_t)), {0.5, 0.0});
    const Series sq = mul(artanh, artanh);
    std::vector<std::complex<double>> c(order + 1);
    const double k = 8.0 / (std::numbers::pi * std::numbers::pi);
    c[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) c[n] = k * sq[2 * n];
    return Series(std::move(c));
}

}  // namespace detail

/// Taylor expansion of φ to `order`. Throws spec_error on out-of-range
/// parameters; admissibility of the resulting series (B1 > 0, φ(0) = 1)
/// is left to validate().
inline Series phi_series(const PhiSpec& spec, std::size_t order) {
    std::vector<std::string> bad;
    detail::parameter_violations(spec, bad);
    if (!bad.empty()) throw spec_error(spec.class_name() + ": " + bad.front());

    return std::visit(
        [order](const auto& p) -> Series {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, phi::Janowski>) {
                return div(Series({1.0, p.A}, order), Series({1.0, p.B}, order));
            } else if constexpr (std::is_same_v<T, phi::OrderAlpha>) {
                return div(Series({1.0, 1.0 - 2.0 * p.alpha}, order), Series({1.0, -1.0}, order));
            } else if constexpr (std::is_same_v<T, phi::AlphaExponential>) {
                const Series e = exp(Series::identity(order));
                return add(Series::constant(p.alpha, order), scale(e, {1.0 - p.alpha, 0.0}));
            } else if constexpr (std::is_same_v<T, phi::Cardioid>) {
                return Series({1.0, 4.0 / 3.0, 2.0 / 3.0}, order);
            } else if constexpr (std::is_same_v<T, phi::Sine>) {
                return detail::sine_series(order);
            } else if constexpr (std::is_same_v<T, phi::Lune>) {
                return add(Series::identity(order), sqrt1p(Series({1.0, 0.0, 1.0}, order)));
            } else if constexpr (std::is_same_v<T, phi::Parabolic>) {
                return detail::parabolic_series(order);
            } else if constexpr (std::is_same_v<T, phi::Limacon>) {
                return Series({1.0, std::numbers::sqrt2, 0.5}, order);
            } else if constexpr (std::is_same_v<T, phi::Nephroid>) {
                return Series({1.0, 1.0, 0.0, -1.0 / 3.0}, order);
            } else {
                return p.series.with_order(order);
            }
        },
        spec.get());
}

/// Hard-coded (B1, B2) for catalog families; nullopt for custom.
inline std::optional<BCoeffs> closed_form_b(const PhiSpec& spec) {
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    return std::visit(
        [&](const auto& p) -> std::optional<BCoeffs> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, phi::Janowski>) return BCoeffs{p.A - p.B, -p.B * (p.A - p.B)};
            else if constexpr (std::is_same_v<T, phi::OrderAlpha>) return BCoeffs{2 - 2 * p.alpha, 2 - 2 * p.alpha};
            else if constexpr (std::is_same_v<T, phi::AlphaExponential>) return BCoeffs{1 - p.alpha, (1 - p.alpha) / 2};
            else if constexpr (std::is_same_v<T, phi::Cardioid>) return BCoeffs{4.0 / 3.0, 2.0 / 3.0};
            else if constexpr (std::is_same_v<T, phi::Sine>) return BCoeffs{1.0, 0.0};
            else if constexpr (std::is_same_v<T, phi::Lune>) return BCoeffs{1.0, 0.5};
            else if constexpr (std::is_same_v<T, phi::Parabolic>) return BCoeffs{8 / pi2, 16 / (3 * pi2)};
            else if constexpr (std::is_same_v<T, phi::Limacon>) return BCoeffs{std::numbers::sqrt2, 0.5};
            else if constexpr (std::is_same_v<T, phi::Nephroid>) return BCoeffs{1.0, 0.0};
            else return std::nullopt;
        },
        spec.get());
}

/// Every constraint φ violates: parameter ranges, φ(0) = 1, real B1 > 0.
inline Admissibility validate(const PhiSpec& spec) {
    Admissibility verdict;
    detail::parameter_violations(spec, verdict.violations);
    if (!verdict.ok()) return verdict;

    const Series s = phi_series(spec, 2);
    if (std::abs(s[0] - std::complex<double>(1)) > 1e-12) verdict.violations.emplace_back("phi(0) = 1 required");
    if (std::abs(s[1].imag()) > 1e-12) verdict.violations.emplace_back("B1 must be real");
    if (!(s[1].real() > 0)) verdict.violations.emplace_back("B1 > 0 required");
    return verdict;
}

/// (B1, B2) read off the expansion. Catalog entries are cross-checked against
/// closed_form_b(); complex B1 or B2 is rejected.
inline BCoeffs b_coeffs(const PhiSpec& spec) {
    const Series s = phi_series(spec, 3);
    if (std::abs(s[1].imag()) > 1e-12 || std::abs(s[2].imag()) > 1e-12) {
        throw spec_error(spec.class_name() + ": B1 and B2 must be real");
    }
    const BCoeffs b{s[1].real(), s[2].real()};
    if (const auto cf = closed_form_b(spec)) {
        if (std::abs(cf->b1 - b.b1) > 1e-12 || std::abs(cf->b2 - b.b2) > 1e-12) {
            throw std::logic_error(spec.label() + ": expansion disagrees with closed-form B1, B2");
        }
    }
    return b;
}

}  // namespace toeplitz
