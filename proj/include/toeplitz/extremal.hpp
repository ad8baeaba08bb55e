#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "toeplitz/bounds.hpp"
#include "toeplitz/phi_catalog.hpp"
#include "toeplitz/series.hpp"

namespace toeplitz {

/// Truncated Taylor expansion of K_φ (starlike, zK'/K = φ(iz)) or
/// H_φ (convex, 1 + zH''/H' = φ(iz)), normalized f(0) = 0, f'(0) = 1.
struct ExtremalFunction {
    ClassKind kind;
    Series f;    // f[0] = 0, f[1] = 1
    Series psi;  // φ(iz)
    std::complex<double> t22_value;
    std::complex<double> t31_value;

    std::complex<double> a2() const { return f[2]; }
    std::complex<double> a3() const { return f[3]; }
};

inline std::complex<double> toeplitz_t22(std::complex<double> a2, std::complex<double> a3) { return a3 * a3 - a2 * a2; }

inline std::complex<double> toeplitz_t31(std::complex<double> a2, std::complex<double> a3) {
    const auto a2sq = a2 * a2;
    return 1.0 - 2.0 * a2sq - a3 * (a3 - 2.0 * a2sq);
}

namespace detail {

inline Series rotated_phi(const PhiSpec& spec, std::size_t order) {
    return compose(phi_series(spec, order), Series::monomial({0.0, 1.0}, 1, order));
}

inline void require_admissible(const PhiSpec& spec) {
    const Admissibility adm = validate(spec);
    if (!adm.ok()) throw spec_error(spec.label() + ": inadmissible: " + adm.violations.front());
}

inline void require_extremal_order(std::size_t order) {
    if (order < 3) throw std::invalid_argument("extremal functions need order >= 3");
}

inline ExtremalFunction finish(ClassKind kind, std::vector<std::complex<double>> a, Series psi) {
    Series f(std::move(a));
    const auto t22 = toeplitz_t22(f[2], f[3]);
    const auto t31 = toeplitz_t31(f[2], f[3]);
    return {kind, std::move(f), std::move(psi), t22, t31};
}

}  // namespace detail

/// K_φ from zK' = K ψ:  a_n = (1/(n-1)) sum_{k=1}^{n-1} a_k ψ_{n-k}.
inline ExtremalFunction k_phi(const PhiSpec& spec, std::size_t order) {
    detail::require_extremal_order(order);
    detail::require_admissible(spec);
    Series psi = detail::rotated_phi(spec, order);

    std::vector<std::complex<double>> a(order + 1);
    a[1] = 1;
    for (std::size_t n = 2; n <= order; ++n) {
        std::complex<double> acc{};
        for (std::size_t k = 1; k < n; ++k) acc += a[k] * psi[n - k];
        a[n] = acc / static_cast<double>(n - 1);
    }
    return detail::finish(ClassKind::starlike, std::move(a), std::move(psi));
}

/// H_φ through g = H':  m g_m = sum_{k=0}^{m-1} g_k ψ_{m-k},  a_{m+1} = g_m/(m+1).
inline ExtremalFunction h_phi(const PhiSpec& spec, std::size_t order) {
    detail::require_extremal_order(order);
    detail::require_admissible(spec);
    Series psi = detail::rotated_phi(spec, order);

    std::vector<std::complex<double>> g(order);
    g[0] = 1;
    for (std::size_t m = 1; m < order; ++m) {
        std::complex<double> acc{};
        for (std::size_t k = 0; k < m; ++k) acc += g[k] * psi[m - k];
        g[m] = acc / static_cast<double>(m);
    }
    std::vector<std::complex<double>> a(order + 1);
    for (std::size_t m = 0; m < order; ++m) a[m + 1] = g[m] / static_cast<double>(m + 1);
    return detail::finish(ClassKind::convex, std::move(a), std::move(psi));
}

inline ExtremalFunction extremal(const PhiSpec& spec, ClassKind kind, std::size_t order) {
    return kind == ClassKind::starlike ? k_phi(spec, order) : h_phi(spec, order);
}

/// Largest coefficient modulus of zK' - K φ(iz) (starlike) or
/// zH'' - H' (φ(iz) - 1) (convex), over the terms the truncation determines.
/// φ(iz) is rebuilt from `spec`, not taken from `ef.psi`.
inline double residual(const ExtremalFunction& ef, const PhiSpec& spec) {
    const std::size_t N = ef.f.order();
    const Series psi = detail::rotated_phi(spec, N);
    if (ef.kind == ClassKind::starlike) {
        const Series lhs = shift(derive(ef.f));
        const Series rhs = mul(ef.f, psi);
        return max_abs_diff(lhs, rhs);
    }
    // H' is known through z^{N-1}, so the identity is checked to that degree.
    const Series d1 = derive(ef.f);
    const Series lhs = shift(derive(d1));
    const Series rhs = mul(d1, sub(psi, Series::constant(1.0, N)));
    return max_abs_diff(lhs, rhs, N - 1);
}

}  // namespace toeplitz
