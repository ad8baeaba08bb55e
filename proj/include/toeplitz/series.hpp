#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toeplitz {

/// Raised when a series operation's precondition does not hold
/// (mismatched truncation orders, zero divisor, bad constant term).
class series_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Truncated formal power series c[0] + c[1] z + ... + c[N] z^N over complex
/// coefficients. Values are immutable once constructed; every arithmetic
/// operation returns a new series of the same order and discards terms
/// beyond z^N.
template <typename Real>
class basic_series {
public:
    using real_type = Real;
    using value_type = std::complex<Real>;

    /// Zero series of the given order.
    explicit basic_series(std::size_t order) : coeffs_(order + 1) {}

    explicit basic_series(std::vector<value_type> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw series_error("series needs at least one coefficient");
        }
    }

    /// Coefficients given low-to-high, padded with zeros (or truncated) to `order`.
    basic_series(std::initializer_list<value_type> coeffs, std::size_t order)
        : coeffs_(order + 1) {
        std::size_t n = 0;
        for (const auto& c : coeffs) {
            if (n > order) break;
            coeffs_[n++] = c;
        }
    }

    static basic_series constant(value_type c, std::size_t order) {
        basic_series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c z^k, or the zero series when k exceeds the order.
    static basic_series monomial(value_type c, std::size_t k, std::size_t order) {
        basic_series s(order);
        if (k <= order) s.coeffs_[k] = c;
        return s;
    }

    static basic_series identity(std::size_t order) { return monomial(value_type(1), 1, order); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const value_type& operator[](std::size_t n) const { return coeffs_.at(n); }

    std::span<const value_type> coeffs() const noexcept { return coeffs_; }

    /// Same coefficients re-truncated (or zero-padded) to another order.
    basic_series with_order(std::size_t order) const {
        std::vector<value_type> c(order + 1);
        for (std::size_t n = 0; n <= order && n < coeffs_.size(); ++n) c[n] = coeffs_[n];
        return basic_series(std::move(c));
    }

    friend bool operator==(const basic_series&, const basic_series&) = default;

private:
    std::vector<value_type> coeffs_;
};

using Series = basic_series<double>;

namespace detail {

template <typename Real>
void require_same_order(const basic_series<Real>& a, const basic_series<Real>& b, const char* op) {
    if (a.order() != b.order()) {
        throw series_error(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                           " vs " + std::to_string(b.order()) + ")");
    }
}

// Tolerance for "this coefficient must be exactly c" preconditions.
inline constexpr double constant_term_tol = 1e-12;

}  // namespace detail

template <typename Real>
basic_series<Real> add(const basic_series<Real>& a, const basic_series<Real>& b) {
    detail::require_same_order(a, b, "add");
    std::vector<std::complex<Real>> c(a.order() + 1);
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] + b[n];
    return basic_series<Real>(std::move(c));
}

template <typename Real>
basic_series<Real> sub(const basic_series<Real>& a, const basic_series<Real>& b) {
    detail::require_same_order(a, b, "sub");
    std::vector<std::complex<Real>> c(a.order() + 1);
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] - b[n];
    return basic_series<Real>(std::move(c));
}

template <typename Real>
basic_series<Real> scale(const basic_series<Real>& a, std::complex<Real> k) {
    std::vector<std::complex<Real>> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= k;
    return basic_series<Real>(std::move(c));
}

/// Truncated Cauchy product.
template <typename Real>
basic_series<Real> mul(const basic_series<Real>& a, const basic_series<Real>& b) {
    detail::require_same_order(a, b, "mul");
    const std::size_t N = a.order();
    std::vector<std::complex<Real>> c(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        if (a[i] == std::complex<Real>{}) continue;
        for (std::size_t j = 0; i + j <= N; ++j) c[i + j] += a[i] * b[j];
    }
    return basic_series<Real>(std::move(c));
}

/// q with q*b = a at truncation, by forward substitution.
template <typename Real>
basic_series<Real> div(const basic_series<Real>& a, const basic_series<Real>& b) {
    detail::require_same_order(a, b, "div");
    if (b[0] == std::complex<Real>{}) throw series_error("div: divisor has zero constant term");
    const std::size_t N = a.order();
    std::vector<std::complex<Real>> q(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        std::complex<Real> acc = a[n];
        for (std::size_t k = 0; k < n; ++k) acc -= q[k] * b[n - k];
        q[n] = acc / b[0];
    }
    return basic_series<Real>(std::move(q));
}

/// outer(inner(z)) by Horner accumulation; inner must vanish at 0.
template <typename Real>
basic_series<Real> compose(const basic_series<Real>& outer, const basic_series<Real>& inner) {
    detail::require_same_order(outer, inner, "compose");
    if (std::abs(inner[0]) > detail::constant_term_tol) {
        throw series_error("compose: inner series has nonzero constant term");
    }
    // Zero the (tolerated) residue so nothing leaks into lower terms.
    std::vector<std::complex<Real>> in(inner.coeffs().begin(), inner.coeffs().end());
    in[0] = {};
    const basic_series<Real> w(std::move(in));

    const std::size_t N = outer.order();
    auto acc = basic_series<Real>::constant(outer[N], N);
    for (std::size_t k = N; k-- > 0;) {
        acc = add(mul(acc, w), basic_series<Real>::constant(outer[k], N));
    }
    return acc;
}

/// Termwise derivative; the top coefficient is zero-filled so the order is kept.
template <typename Real>
basic_series<Real> derive(const basic_series<Real>& a) {
    const std::size_t N = a.order();
    std::vector<std::complex<Real>> d(N + 1);
    for (std::size_t n = 0; n < N; ++n) d[n] = a[n + 1] * static_cast<Real>(n + 1);
    return basic_series<Real>(std::move(d));
}

/// Multiplication by z (drops the z^N term).
template <typename Real>
basic_series<Real> shift(const basic_series<Real>& a) {
    const std::size_t N = a.order();
    std::vector<std::complex<Real>> s(N + 1);
    for (std::size_t n = 1; n <= N; ++n) s[n] = a[n - 1];
    return basic_series<Real>(std::move(s));
}

/// Square root of a series with constant term 1, normalized to s[0] = 1.
template <typename Real>
basic_series<Real> sqrt1p(const basic_series<Real>& a) {
    if (std::abs(a[0] - std::complex<Real>(1)) > detail::constant_term_tol) {
        throw series_error("sqrt1p: constant term must be 1");
    }
    const std::size_t N = a.order();
    std::vector<std::complex<Real>> s(N + 1);
    s[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        std::complex<Real> acc = a[n];
        for (std::size_t k = 1; k < n; ++k) acc -= s[k] * s[n - k];
        s[n] = acc / Real(2);
    }
    return basic_series<Real>(std::move(s));
}

/// exp of a series with zero constant term: n e_n = sum_{k=1}^n k a_k e_{n-k}.
template <typename Real>
basic_series<Real> exp(const basic_series<Real>& a) {
    if (std::abs(a[0]) > detail::constant_term_tol) {
        throw series_error("exp: constant term must be 0");
    }
    const std::size_t N = a.order();
    std::vector<std::complex<Real>> e(N + 1);
    e[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        std::complex<Real> acc{};
        for (std::size_t k = 1; k <= n; ++k) acc += static_cast<Real>(k) * a[k] * e[n - k];
        e[n] = acc / static_cast<Real>(n);
    }
    return basic_series<Real>(std::move(e));
}

/// log of a series with constant term 1: from a' = l' a.
template <typename Real>
basic_series<Real> log(const basic_series<Real>& a) {
    if (std::abs(a[0] - std::complex<Real>(1)) > detail::constant_term_tol) {
        throw series_error("log: constant term must be 1");
    }
    const std::size_t N = a.order();
    std::vector<std::complex<Real>> l(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        std::complex<Real> acc = static_cast<Real>(n) * a[n];
        for (std::size_t k = 1; k < n; ++k) acc -= static_cast<Real>(k) * l[k] * a[n - k];
        l[n] = acc / static_cast<Real>(n);
    }
    return basic_series<Real>(std::move(l));
}

template <typename Real>
basic_series<Real> operator+(const basic_series<Real>& a, const basic_series<Real>& b) { return add(a, b); }
template <typename Real>
basic_series<Real> operator-(const basic_series<Real>& a, const basic_series<Real>& b) { return sub(a, b); }
template <typename Real>
basic_series<Real> operator*(const basic_series<Real>& a, const basic_series<Real>& b) { return mul(a, b); }
template <typename Real>
basic_series<Real> operator/(const basic_series<Real>& a, const basic_series<Real>& b) { return div(a, b); }

/// Largest coefficient modulus of a - b over indices 0..upto (clamped to the order).
template <typename Real>
Real max_abs_diff(const basic_series<Real>& a, const basic_series<Real>& b,
                  std::size_t upto = static_cast<std::size_t>(-1)) {
    detail::require_same_order(a, b, "max_abs_diff");
    Real m = 0;
    for (std::size_t n = 0; n <= a.order() && n <= upto; ++n) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

}  // namespace toeplitz
