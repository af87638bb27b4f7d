#ifndef MACMAHON_NUMERICS_HPP
#define MACMAHON_NUMERICS_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "qseries.hpp"
#include "series.hpp"

namespace macmahon {

using cplx = std::complex<double>;

// Point of the upper half-plane.
class Tau {
public:
    Tau(double re, double im) : re_(re), im_(im) {
        if (!(im > 0.0) || !std::isfinite(re) || !std::isfinite(im)) {
            throw std::invalid_argument("Tau: imaginary part must be positive (got " + std::to_string(im) + ")");
        }
    }

    double re() const { return re_; }
    double im() const { return im_; }
    cplx value() const { return {re_, im_}; }
    /// q = e^{2 pi i tau}.
    cplx q() const { return std::exp(cplx(0.0, 2.0 * std::numbers::pi) * value()); }

private:
    double re_;
    double im_;
};

// Truncated lattice sum over |n| <= cutoff. The remainder is not folded into
// `value`: `tail_estimate` approximates it (midpoint-integral rule, leading
// order in 1/cutoff) and `tail_bound` bounds its modulus. Rounding in the
// partial sum itself is not included in the bound.
struct LatticeSum {
    cplx value;
    cplx tail_estimate;
    double tail_bound = 0.0;
    int cutoff = 0;

    cplx corrected() const { return value + tail_estimate; }
};

namespace detail {

// x^{-k} for k >= 1 by repeated multiplication.
inline cplx inverse_power(cplx x, int k) {
    cplx p = x;
    for (int i = 1; i < k; ++i) p *= x;
    return 1.0 / p;
}

inline void check_parts(const std::vector<int>& ks, const char* who) {
    if (ks.empty()) throw std::invalid_argument(std::string(who) + ": empty index");
    for (int k : ks) {
        if (k < 2) throw DivergenceGuard(std::string(who) + ": exponents must be >= 2 (got " + std::to_string(k) + ")");
    }
}

// sum over cutoff >= n_1 > ... > n_r >= -cutoff of prod (tau + n_i)^{-k_i}.
// Processing n upward, p[j] holds the sum over chains n_j > ... > n_r seen
// so far; p[r] = 1.
inline cplx ordered_partial_sum(const std::vector<int>& ks, cplx tau, int cutoff) {
    const std::size_t r = ks.size();
    std::vector<cplx> p(r + 1, cplx(0.0));
    p[r] = 1.0;
    for (int n = -cutoff; n <= cutoff; ++n) {
        const cplx x = tau + static_cast<double>(n);
        for (std::size_t j = 0; j < r; ++j) p[j] += inverse_power(x, ks[j]) * p[j + 1];
    }
    return p[0];
}

inline double abs_partial_sum(int k, cplx tau, int cutoff) {
    double s = 0.0;
    for (int n = cutoff; n >= -cutoff; --n) s += std::pow(std::abs(tau + static_cast<double>(n)), -k);
    return s;
}

// sum_{n > N} (tau + n)^{-k} and sum_{n < -N} (tau + n)^{-k}, each by the
// integral over [N + 1/2, inf).
inline cplx upper_tail(int k, cplx tau, int cutoff) {
    const double m = cutoff + 0.5;
    return inverse_power(m + tau, k - 1) / static_cast<double>(k - 1);
}
inline cplx lower_tail(int k, cplx tau, int cutoff) {
    const double m = cutoff + 0.5;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * inverse_power(m - tau, k - 1) / static_cast<double>(k - 1);
}

// Upper bound for one side: sum_{n > N} (n - |Re tau|)^{-k} <= (N - |Re tau|)^{1-k}/(k-1).
inline double one_sided_bound(int k, cplx tau, int cutoff) {
    const double gap = cutoff - std::abs(tau.real());
    if (gap <= 0.0) return std::numeric_limits<double>::infinity();
    return std::pow(gap, 1 - k) / static_cast<double>(k - 1);
}

} // namespace detail

/// Multitangent Psi_{k_1..k_r}(tau) truncated to cutoff >= n_1 > ... > n_r >= -cutoff.
/// The tail estimate keeps the terms where only n_1 > cutoff or only
/// n_r < -cutoff, which dominate; depth 1 runs through the same code.
inline LatticeSum multitangent(const std::vector<int>& ks, const Tau& tau, int cutoff) {
    detail::check_parts(ks, "multitangent");
    const int r = static_cast<int>(ks.size());
    if (cutoff < r || cutoff < 1) throw std::invalid_argument("multitangent: cutoff must be >= depth and >= 1");
    const cplx t = tau.value();

    LatticeSum out;
    out.cutoff = cutoff;
    out.value = detail::ordered_partial_sum(ks, t, cutoff);

    const std::vector<int> drop_first(ks.begin() + 1, ks.end());
    const std::vector<int> drop_last(ks.begin(), ks.end() - 1);
    const cplx rest_after = drop_first.empty() ? cplx(1.0) : detail::ordered_partial_sum(drop_first, t, cutoff);
    const cplx rest_before = drop_last.empty() ? cplx(1.0) : detail::ordered_partial_sum(drop_last, t, cutoff);
    out.tail_estimate = detail::upper_tail(ks.front(), t, cutoff) * rest_after + rest_before * detail::lower_tail(ks.back(), t, cutoff);

    // Any omitted term has n_1 > cutoff or n_r < -cutoff; bound the others by
    // full absolute sums.
    std::vector<double> abs_full;
    for (int k : ks) abs_full.push_back(detail::abs_partial_sum(k, t, cutoff) + 2.0 * detail::one_sided_bound(k, t, cutoff));
    double after = 1.0;
    double before = 1.0;
    for (int i = 1; i < r; ++i) after *= abs_full[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < r; ++i) before *= abs_full[static_cast<std::size_t>(i)];
    out.tail_bound = detail::one_sided_bound(ks.front(), t, cutoff) * after + before * detail::one_sided_bound(ks.back(), t, cutoff);
    return out;
}

/// Monotangent Psi_k(tau) = sum_n (tau + n)^{-k}, truncated to |n| <= cutoff.
inline LatticeSum monotangent(int k, const Tau& tau, int cutoff) {
    if (k < 2) throw DivergenceGuard("monotangent: k must be >= 2 (got " + std::to_string(k) + ")");
    return multitangent({k}, tau, cutoff);
}

/// q-side of the Lipschitz formula: (-2 pi i)^k/(k-1)! sum_{d>0} d^{k-1} q^d.
inline cplx lipschitz_monotangent(int k, const Tau& tau) {
    if (k < 2) throw DivergenceGuard("lipschitz_monotangent: k must be >= 2");
    const cplx q = tau.q();
    cplx sum = 0.0;
    cplx qd = q;
    for (int d = 1; d < 1000000; ++d, qd *= q) {
        const cplx term = std::pow(static_cast<double>(d), k - 1) * qd;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    double fact = 1.0;
    for (int i = 2; i < k; ++i) fact *= i;
    return std::pow(cplx(0.0, -2.0 * std::numbers::pi), k) / fact * sum;
}

/// pi^{2n-2} 2^{2n-1} / (2n)!, the ratio Psi_{{2}^n} / Psi_2.
inline double lemma_constant(int n) {
    double v = std::pow(std::numbers::pi, 2 * n - 2) * std::pow(2.0, 2 * n - 1);
    for (int i = 2; i <= 2 * n; ++i) v /= i;
    return v;
}

// ---------------------------------------------------------------------------
// Direct evaluation of the defining series at a real q in (0, 1)

enum class SeriesKind { A, C, G, Go };

struct SeriesSpec {
    SeriesKind kind;
    int parameter;  // r for A/C, k for G/Go
};

struct EvalResult {
    double value = 0.0;
    long terms_used = 0;
    bool converged = false;
};

namespace detail {

// sum_{n>=1} n^e x^n for 0 < x < 1.
inline double weighted_geometric(int e, double x) {
    double s = 0.0;
    double xn = x;
    for (long n = 1;; ++n, xn *= x) {
        const double t = std::pow(static_cast<double>(n), e) * xn;
        s += t;
        if (n > e && t <= 1e-18 * s) break;
        if (xn == 0.0) break;
    }
    return s;
}

} // namespace detail

/// Sums the defining m-series (A_r, C_r as ordered sums of q^m/(1-q^m)^2;
/// G_k, G°_k as double sums) directly at numeric q. Stops once the bound on
/// the remaining terms falls below 1e-16 of the running value; throws
/// NonConvergence if max_terms is reached with a large last term.
inline EvalResult eval_qseries_at(const SeriesSpec& spec, double q, long max_terms = 50'000'000) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("eval_qseries_at: q must lie in (0, 1)");
    const bool odd = spec.kind == SeriesKind::C || spec.kind == SeriesKind::Go;
    const long step = odd ? 2 : 1;
    EvalResult res;
    double last_relative = 1.0;

    if (spec.kind == SeriesKind::A || spec.kind == SeriesKind::C) {
        const int r = spec.parameter;
        if (r < 1) throw std::invalid_argument("eval_qseries_at: r must be >= 1");
        std::vector<double> e(static_cast<std::size_t>(r) + 1, 0.0);
        e[0] = 1.0;
        double qm = q;
        const double q_step = odd ? q * q : q;
        for (long m = 1, count = 0; count < max_terms; m += step, ++count, qm *= q_step) {
            const double f = qm / ((1.0 - qm) * (1.0 - qm));
            const double before = e[static_cast<std::size_t>(r) - 1];
            for (int j = r; j >= 1; --j) e[static_cast<std::size_t>(j)] += f * e[static_cast<std::size_t>(j) - 1];
            res.terms_used = count + 1;
            const double value = e[static_cast<std::size_t>(r)];
            if (value > 0.0) {
                last_relative = f * before / (1.0 - q_step) / value;
                if (last_relative < 1e-16 || f == 0.0) {
                    res.converged = true;
                    break;
                }
            }
        }
        res.value = e[static_cast<std::size_t>(r)];
    } else {
        const int k = spec.parameter;
        if (k < 2 || k % 2 != 0) throw std::invalid_argument("eval_qseries_at: k must be even and >= 2");
        double fact = 1.0;
        for (int i = 2; i < k; ++i) fact *= i;
        double sum = 0.0;
        const double q_step = odd ? q * q : q;
        double qm = q;
        for (long m = 1, count = 0; count < max_terms; m += step, ++count, qm *= q_step) {
            const double t = detail::weighted_geometric(k - 1, qm);
            sum += t;
            res.terms_used = count + 1;
            last_relative = t / (1.0 - q_step) / sum;
            if (last_relative < 1e-16 || t == 0.0) {
                res.converged = true;
                break;
            }
        }
        res.value = sum / fact;
        if (spec.kind == SeriesKind::G) res.value += (-bernoulli(k) / Rational(2 * factorial(static_cast<unsigned>(k)))).to_double();
    }
    if (!res.converged && last_relative > 1e-10) {
        throw NonConvergence("eval_qseries_at: term cap " + std::to_string(max_terms) + " reached with relative tail " +
                             std::to_string(last_relative));
    }
    return res;
}

/// sum_n c_n q^n over the stored coefficients of a truncated series.
inline double eval_coefficients_at(const QSeries& s, double q) {
    double v = 0.0;
    for (int n = s.order(); n >= 0; --n) v = v * q + s[n].to_double();
    return v;
}

// ---------------------------------------------------------------------------
// q -> 1 limits (1-q)^{2r} A_r(q) -> pi^{2r}/(2r+1)!

struct LimitPoint {
    double q;
    double value;  // (1-q)^{2r} A_r(q)
};

struct LimitReport {
    int r = 0;
    std::vector<LimitPoint> points;
    bool extrapolated = false;  // false for a single grid point
    double estimate = 0.0;
    double target = 0.0;
    double relative_error = 0.0;
    // Relative error of the estimate using the grid up to point i (i >= 1).
    std::vector<double> history;
};

/// pi^{2r}/(2r+1)!.
inline double zeta_222(int r) {
    double v = std::pow(std::numbers::pi, 2 * r);
    for (int i = 2; i <= 2 * r + 1; ++i) v /= i;
    return v;
}

/// Value at h = 0 of the polynomial through (h_i, v_i) (Neville).
inline double extrapolate_to_zero(const std::vector<double>& h, const std::vector<double>& v) {
    if (h.empty() || h.size() != v.size()) throw std::invalid_argument("extrapolate_to_zero: bad input");
    std::vector<double> p = v;
    const std::size_t n = h.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            p[i] = (h[i + level] * p[i] - h[i] * p[i + 1]) / (h[i + level] - h[i]);
        }
    }
    return p[0];
}

/// Evaluates (1-q)^{2r} A_r(q) on the grid and extrapolates in h = 1-q with
/// a polynomial of degree `degree` through the last degree+1 points.
inline LimitReport limit_check(int r, const std::vector<double>& q_grid, int degree = 2) {
    if (r < 1) throw std::invalid_argument("limit_check: r must be >= 1");
    if (q_grid.empty()) throw std::invalid_argument("limit_check: empty grid");
    for (std::size_t i = 1; i < q_grid.size(); ++i) {
        if (!(q_grid[i] > q_grid[i - 1])) throw std::invalid_argument("limit_check: grid must increase toward 1");
    }
    LimitReport rep;
    rep.r = r;
    rep.target = zeta_222(r);
    std::vector<double> h;
    std::vector<double> v;
    for (double q : q_grid) {
        const double a = eval_qseries_at({SeriesKind::A, r}, q).value;
        const double value = std::pow(1.0 - q, 2 * r) * a;
        rep.points.push_back({q, value});
        h.push_back(1.0 - q);
        v.push_back(value);
    }
    auto estimate_upto = [&](std::size_t last) {
        const std::size_t first = last >= static_cast<std::size_t>(degree) ? last - static_cast<std::size_t>(degree) : 0;
        return extrapolate_to_zero(std::vector<double>(h.begin() + static_cast<long>(first), h.begin() + static_cast<long>(last) + 1),
                                   std::vector<double>(v.begin() + static_cast<long>(first), v.begin() + static_cast<long>(last) + 1));
    };
    for (std::size_t i = 1; i < h.size(); ++i) rep.history.push_back(std::abs(estimate_upto(i) - rep.target) / rep.target);
    rep.extrapolated = h.size() > 1;
    rep.estimate = rep.extrapolated ? estimate_upto(h.size() - 1) : v.front();
    rep.relative_error = std::abs(rep.estimate - rep.target) / rep.target;
    return rep;
}

/// q = 1 - 2^{-k} for k = k_lo..k_hi.
inline std::vector<double> dyadic_grid(int k_lo, int k_hi) {
    if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("dyadic_grid: need 1 <= k_lo <= k_hi");
    std::vector<double> g;
    for (int k = k_lo; k <= k_hi; ++k) g.push_back(1.0 - std::ldexp(1.0, -k));
    return g;
}

} // namespace macmahon

#endif // MACMAHON_NUMERICS_HPP
