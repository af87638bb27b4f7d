#ifndef MACMAHON_SERIES_HPP
#define MACMAHON_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace macmahon {

template <class R>
class Series;

// Coefficient-ring interface used by the series engine. A ring element
// supplies +, -, *, ==, and scaling by Rational. The traits add the
// shape-aware constants: zero_like/one_like return elements compatible with
// an existing one (for nested series this carries the inner truncation
// order along).
template <class R>
struct ring_traits {
    static R zero_like(const R&) { return R(0); }
    static R one_like(const R&) { return R(1); }
    static bool is_zero(const R& x) {
        if constexpr (requires { x.is_zero(); }) {
            return x.is_zero();
        } else {
            return x == R(0);
        }
    }
};

template <class R>
struct ring_traits<Series<R>> {
    static Series<R> zero_like(const Series<R>& s) { return Series<R>(s.order(), ring_traits<R>::zero_like(s[0])); }
    static Series<R> one_like(const Series<R>& s) {
        auto r = zero_like(s);
        r.coeff_ref(0) = ring_traits<R>::one_like(s[0]);
        return r;
    }
    static bool is_zero(const Series<R>& s) { return s.is_zero(); }
};

// Truncated power series sum_{n=0}^{order} c_n x^n. The truncation order is
// explicit; every binary operation yields order = min of operand orders.
template <class R>
class Series {
public:
    using coefficient_type = R;

    explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("Series: at least one coefficient is required");
    }

    /// All coefficients equal to `fill` (normally a zero element).
    Series(int order, const R& fill) : coeffs_(check_order(order) + 1, fill) {}

    static Series zero(int order, const R& like) { return Series(order, ring_traits<R>::zero_like(like)); }

    static Series constant(const R& c, int order) {
        Series s(order, ring_traits<R>::zero_like(c));
        s.coeffs_[0] = c;
        return s;
    }

    /// c * x^exponent, or the zero series if exponent exceeds the order.
    static Series monomial(const R& c, int exponent, int order) {
        Series s(order, ring_traits<R>::zero_like(c));
        if (exponent < 0) throw std::invalid_argument("Series::monomial: negative exponent");
        if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    R& coeff_ref(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    std::span<const R> coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return ring_traits<R>::is_zero(c); });
    }

    Series truncated(int order) const {
        if (order > this->order()) throw std::invalid_argument("Series::truncated: cannot raise the order");
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + check_order(order) + 1));
    }

    /// Multiplies every coefficient by a ring element.
    Series scaled(const R& c) const {
        Series r = *this;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }

    template <class F>
    auto map(F&& f) const -> Series<std::decay_t<decltype(f(std::declval<const R&>()))>> {
        using T = std::decay_t<decltype(f(std::declval<const R&>()))>;
        std::vector<T> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return Series<T>(std::move(out));
    }

    Series& operator+=(const Series& o) {
        shrink_to(o.order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        shrink_to(o.order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }

    // Cauchy product truncated at the smaller order. Zero coefficients are
    // skipped, which matters for the sparse series used throughout.
    friend Series operator*(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series r(n, ring_traits<R>::zero_like(a[0]) + ring_traits<R>::zero_like(b[0]));
        for (int i = 0; i <= n; ++i) {
            const R& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (ring_traits<R>::is_zero(ai)) continue;
            for (int j = 0; i + j <= n; ++j) {
                const R& bj = b.coeffs_[static_cast<std::size_t>(j)];
                if (ring_traits<R>::is_zero(bj)) continue;
                auto& slot = r.coeffs_[static_cast<std::size_t>(i + j)];
                slot = slot + ai * bj;
            }
        }
        return r;
    }

    friend Series operator*(Series a, const Rational& c) {
        for (auto& x : a.coeffs_) x = x * c;
        return a;
    }
    friend Series operator*(const Rational& c, Series a) { return std::move(a) * c; }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Series: negative truncation order " + std::to_string(order));
        return order;
    }

    void shrink_to(int order) {
        if (order < this->order()) coeffs_.erase(coeffs_.begin() + order + 1, coeffs_.end());
    }

    std::vector<R> coeffs_;
};

using QSeries = Series<Rational>;
using XSeries = Series<QSeries>;

template <class R>
Series<R> ps_add(const Series<R>& a, const Series<R>& b) {
    return a + b;
}

template <class R>
Series<R> ps_mul(const Series<R>& a, const Series<R>& b) {
    return a * b;
}

/// exp(a) = sum a^n / n!, for a with vanishing constant term. Uses
/// n b_n = sum_{k=1}^n k a_k b_{n-k}.
template <class R>
Series<R> ps_exp(const Series<R>& a) {
    using T = ring_traits<R>;
    if (!T::is_zero(a[0])) throw NonzeroConstantTerm("ps_exp: argument has a nonzero constant term");
    const int n = a.order();
    Series<R> b(n, T::zero_like(a[0]));
    b.coeff_ref(0) = T::one_like(a[0]);
    for (int m = 1; m <= n; ++m) {
        R acc = T::zero_like(a[0]);
        for (int k = 1; k <= m; ++k) {
            if (T::is_zero(a[k])) continue;
            acc = acc + (a[k] * b[m - k]) * Rational(k);
        }
        b.coeff_ref(m) = acc * Rational(1, m);
    }
    return b;
}

/// f(g(x)) truncated at min(f.order, g.order); g must have zero constant term.
template <class R>
Series<R> ps_compose(const Series<R>& f, const Series<R>& g) {
    using T = ring_traits<R>;
    if (!T::is_zero(g[0])) throw NonzeroConstantTerm("ps_compose: inner series has a nonzero constant term");
    const int n = std::min(f.order(), g.order());
    const Series<R> inner = g.truncated(n);
    Series<R> result = Series<R>::constant(f[0], n);
    Series<R> power = Series<R>::constant(T::one_like(g[0]), n);
    for (int k = 1; k <= n; ++k) {
        power = power * inner;
        if (T::is_zero(f[k])) continue;
        result += power.scaled(f[k]);
    }
    return result;
}

/// arcsin(x) = sum_j binom(2j,j) / (4^j (2j+1)) x^{2j+1}, via the term ratio
/// c_{j+1} = c_j (2j+1)^2 / ((2j+2)(2j+3)).
inline QSeries arcsin_series(int x_order) {
    if (x_order < 1) throw std::invalid_argument("arcsin_series: x_order must be >= 1");
    QSeries s(x_order, Rational(0));
    Rational c(1);
    for (long j = 0; 2 * j + 1 <= x_order; ++j) {
        s.coeff_ref(static_cast<int>(2 * j + 1)) = c;
        c *= Rational((2 * j + 1) * (2 * j + 1), (2 * j + 2) * (2 * j + 3));
    }
    return s;
}

/// sin(x) = sum_j (-1)^j x^{2j+1} / (2j+1)!.
inline QSeries sin_series(int x_order) {
    if (x_order < 1) throw std::invalid_argument("sin_series: x_order must be >= 1");
    QSeries s(x_order, Rational(0));
    for (int j = 0; 2 * j + 1 <= x_order; ++j) {
        Rational c(BigInt(1), factorial(static_cast<unsigned>(2 * j + 1)));
        s.coeff_ref(2 * j + 1) = (j % 2 == 0) ? c : -c;
    }
    return s;
}

/// f(c x).
template <class R>
Series<R> scale_argument(const Series<R>& f, const Rational& c) {
    Series<R> r = f;
    Rational p(1);
    for (int n = 0; n <= f.order(); ++n, p *= c) r.coeff_ref(n) = f[n] * p;
    return r;
}

/// f(x^p), keeping the truncation order of f.
template <class R>
Series<R> substitute_power(const Series<R>& f, int p) {
    if (p < 1) throw std::invalid_argument("substitute_power: exponent must be >= 1");
    Series<R> r = Series<R>::zero(f.order(), f[0]);
    for (int n = 0; n * p <= f.order(); ++n) r.coeff_ref(n * p) = f[n];
    return r;
}

/// x^k f(x); the order grows by k since the product is known exactly there.
template <class R>
Series<R> shift_up(const Series<R>& f, int k) {
    if (k < 0) throw std::invalid_argument("shift_up: negative shift");
    Series<R> r = Series<R>::zero(f.order() + k, f[0]);
    for (int n = 0; n <= f.order(); ++n) r.coeff_ref(n + k) = f[n];
    return r;
}

/// f(x)/x for f with zero constant term; the order drops by one.
template <class R>
Series<R> divide_by_x(const Series<R>& f) {
    if (!ring_traits<R>::is_zero(f[0])) throw NonzeroConstantTerm("divide_by_x: nonzero constant term");
    if (f.order() < 1) throw std::invalid_argument("divide_by_x: order must be >= 1");
    std::vector<R> out(f.coeffs().begin() + 1, f.coeffs().end());
    return Series<R>(std::move(out));
}

/// Embeds a rational series into Series<R>, using `like` for the shape of
/// the coefficient ring's unit.
template <class R>
Series<R> lift(const QSeries& s, const R& like) {
    const R one = ring_traits<R>::one_like(like);
    return s.map([&](const Rational& c) { return one * c; });
}

/// Common inner truncation order of a series of series; throws if the
/// coefficients disagree.
template <class R>
int inner_order(const Series<Series<R>>& s) {
    const int q = s[0].order();
    for (const auto& c : s.coeffs()) {
        if (c.order() != q) throw std::logic_error("inner_order: coefficients carry different truncation orders");
    }
    return q;
}

} // namespace macmahon

#endif // MACMAHON_SERIES_HPP
