#ifndef MACMAHON_QSERIES_HPP
#define MACMAHON_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "series.hpp"

namespace macmahon {

// Integer composition (k_1, ..., k_r) with every part >= 1.
class Index {
public:
    Index(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("Index: at least one part is required");
        for (int k : parts_) {
            if (k < 1) throw std::invalid_argument("Index: parts must be >= 1");
        }
    }
    Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

    /// (k, ..., k) with `depth` copies.
    static Index repeated(int k, int depth) {
        if (depth < 1) throw std::invalid_argument("Index::repeated: depth must be >= 1");
        return Index(std::vector<int>(static_cast<std::size_t>(depth), k));
    }

    const std::vector<int>& parts() const { return parts_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool admissible() const { return parts_.front() >= 2; }
    bool h2() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int k) { return k >= 2; });
    }

    std::string str() const {
        std::string s;
        for (int k : parts_) s += (s.empty() ? "" : ",") + std::to_string(k);
        return s;
    }

    friend bool operator==(const Index&, const Index&) = default;

private:
    std::vector<int> parts_;
};

namespace detail {

inline void check_order(int order, const char* who) {
    if (order < 0) throw std::invalid_argument(std::string(who) + ": order must be >= 0");
}

inline void check_weight(int k, const char* who) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument(std::string(who) + ": k must be an even integer >= 2");
}

inline QSeries to_series(const std::vector<BigInt>& numerators, const BigInt& denominator) {
    std::vector<Rational> c;
    c.reserve(numerators.size());
    for (const auto& n : numerators) c.emplace_back(n, denominator);
    return QSeries(std::move(c));
}

} // namespace detail

/// Bernoulli numbers from sum_{j=0}^{k} binom(k+1, j) B_j = 0 (so B_1 = -1/2),
/// memoized behind a mutex.
inline Rational bernoulli(int k) {
    if (k < 0) throw std::invalid_argument("bernoulli: k must be >= 0");
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard lock(mutex);
    for (int m = static_cast<int>(cache.size()); m <= k; ++m) {
        Rational sum(0);
        for (int j = 0; j < m; ++j) sum += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j))) * cache[static_cast<std::size_t>(j)];
        cache.push_back(-sum / Rational(m + 1));
    }
    return cache[static_cast<std::size_t>(k)];
}

/// sigma_e(N) for 0 <= N <= order by a divisor sieve; sigma_e(0) = 0.
inline std::vector<BigInt> divisor_sums(int e, int order) {
    std::vector<BigInt> sigma(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (int d = 1; d <= order; ++d) {
        const BigInt p = ipow(BigInt(d), static_cast<unsigned>(e));
        for (int n = d; n <= order; n += d) sigma[static_cast<std::size_t>(n)] += p;
    }
    return sigma;
}

/// sum_{d | N, N/d odd} d^e for 0 <= N <= order.
inline std::vector<BigInt> odd_cofactor_divisor_sums(int e, int order) {
    std::vector<BigInt> sigma(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (int d = 1; d <= order; ++d) {
        const BigInt p = ipow(BigInt(d), static_cast<unsigned>(e));
        for (int n = d; n <= order; n += 2 * d) sigma[static_cast<std::size_t>(n)] += p;
    }
    return sigma;
}

/// G_k(q) = -B_k/(2 k!) + 1/(k-1)! sum_N sigma_{k-1}(N) q^N.
inline QSeries eisenstein_g(int k, int order) {
    detail::check_weight(k, "eisenstein_g");
    detail::check_order(order, "eisenstein_g");
    QSeries s = detail::to_series(divisor_sums(k - 1, order), factorial(static_cast<unsigned>(k - 1)));
    s.coeff_ref(0) = -bernoulli(k) / Rational(2 * factorial(static_cast<unsigned>(k)));
    return s;
}

/// Odd Eisenstein series G_k(q) - G_k(q^2). Built from the odd-m divisor sum
/// and checked against the subtraction form.
inline QSeries eisenstein_g_odd(int k, int order) {
    detail::check_weight(k, "eisenstein_g_odd");
    detail::check_order(order, "eisenstein_g_odd");
    QSeries direct = detail::to_series(odd_cofactor_divisor_sums(k - 1, order), factorial(static_cast<unsigned>(k - 1)));
    const QSeries g = eisenstein_g(k, order);
    const QSeries by_subtraction = g - substitute_power(g, 2);
    if (!(direct == by_subtraction)) throw std::logic_error("eisenstein_g_odd: direct sum disagrees with G_k(q) - G_k(q^2)");
    return direct;
}

namespace detail {

// Depth-first enumeration of m_1 > ... > m_r > 0, n_i > 0 with
// sum m_i n_i <= order, accumulating prod n_i^{k_i - 1} into out[sum].
// Positions are filled from the innermost (smallest m) outward.
inline void bracket_dfs(const std::vector<int>& ks, bool odd_only, int pos, int min_m, int budget, const BigInt& weight,
                        int degree, std::vector<BigInt>& out) {
    if (pos < 0) {
        out[static_cast<std::size_t>(degree)] += weight;
        return;
    }
    const int step = odd_only ? 2 : 1;
    int m = min_m;
    if (odd_only && m % 2 == 0) ++m;
    for (;; m += step) {
        // Minimal cost of the pos outer positions: m + step, m + 2 step, ... with n = 1.
        const int rest = pos * m + step * pos * (pos + 1) / 2;
        if (m + rest > budget) break;
        for (int n = 1; m * n + rest <= budget; ++n) {
            const BigInt w = weight * ipow(BigInt(n), static_cast<unsigned>(ks[static_cast<std::size_t>(pos)] - 1));
            bracket_dfs(ks, odd_only, pos - 1, m + 1, budget - m * n, w, degree + m * n, out);
        }
    }
}

inline QSeries bracket(const Index& idx, int order, bool odd_only) {
    check_order(order, odd_only ? "g_odd_series" : "g_series");
    std::vector<BigInt> acc(static_cast<std::size_t>(order) + 1, BigInt(0));
    const auto& ks = idx.parts();
    bracket_dfs(ks, odd_only, idx.depth() - 1, 1, order, BigInt(1), 0, acc);
    BigInt den(1);
    for (int k : ks) den *= factorial(static_cast<unsigned>(k - 1));
    return to_series(acc, den);
}

// Elementary symmetric function e_r of the series f_m = sum_n n q^{mn} over
// the admissible m, i.e. the expanded product formula for A_r / C_r.
inline QSeries macmahon_product(int r, int order, bool odd_only) {
    check_order(order, odd_only ? "macmahon_c" : "macmahon_a");
    if (r < 1) throw std::invalid_argument("macmahon: r must be >= 1");
    std::vector<QSeries> e(static_cast<std::size_t>(r) + 1, QSeries(order, Rational(0)));
    e[0].coeff_ref(0) = Rational(1);
    for (int m = 1; m <= order; m += odd_only ? 2 : 1) {
        QSeries f(order, Rational(0));
        for (int n = 1; m * n <= order; ++n) f.coeff_ref(m * n) = Rational(n);
        for (int j = r; j >= 1; --j) e[static_cast<std::size_t>(j)] += f * e[static_cast<std::size_t>(j - 1)];
    }
    return e[static_cast<std::size_t>(r)];
}

} // namespace detail

/// g(k_1, ..., k_r) truncated at q^order.
inline QSeries g_series(const Index& idx, int order) { return detail::bracket(idx, order, false); }

/// Odd-m restriction g°(k_1, ..., k_r).
inline QSeries g_odd_series(const Index& idx, int order) { return detail::bracket(idx, order, true); }

/// MacMahon's A_r from the product formula; cross-checked against g({2}^r).
inline QSeries macmahon_a(int r, int order) {
    QSeries a = detail::macmahon_product(r, order, false);
    if (!(a == g_series(Index::repeated(2, r), order))) throw std::logic_error("macmahon_a: product formula disagrees with g({2}^r)");
    return a;
}

/// Odd variant C_r; cross-checked against g°({2}^r).
inline QSeries macmahon_c(int r, int order) {
    QSeries c = detail::macmahon_product(r, order, true);
    if (!(c == g_odd_series(Index::repeated(2, r), order))) throw std::logic_error("macmahon_c: product formula disagrees with g°({2}^r)");
    return c;
}

/// Coefficient of q^N in A_r (or C_r when odd_only) by direct enumeration of
/// m_1 n_1 + ... + m_r n_r = N, m_1 > ... > m_r > 0, weighted by prod n_i.
/// No series arithmetic is involved.
inline BigInt partition_oracle(int r, int N, bool odd_only = false) {
    if (r < 1 || N < 0) throw std::invalid_argument("partition_oracle: need r >= 1 and N >= 0");
    BigInt total(0);
    std::vector<int> parts;
    int part_sum = 0;
    // Choose strictly decreasing parts m_1 > m_2 > ..., then distribute N.
    std::function<void(int)> choose = [&](int max_part) {
        if (static_cast<int>(parts.size()) == r) {
            // Count weighted solutions of sum m_i n_i = N with n_i >= 1.
            std::function<BigInt(std::size_t, int)> count = [&](std::size_t i, int rem) -> BigInt {
                if (i == parts.size()) return BigInt(rem == 0 ? 1 : 0);
                BigInt s(0);
                for (int n = 1; parts[i] * n <= rem; ++n) s += n * count(i + 1, rem - parts[i] * n);
                return s;
            };
            total += count(0, N);
            return;
        }
        const int left = r - static_cast<int>(parts.size()) - 1;
        const int smallest_rest = odd_only ? left * left : left * (left + 1) / 2;
        for (int m = max_part; m >= 1; --m) {
            if (odd_only && m % 2 == 0) continue;
            if (part_sum + m + smallest_rest > N) continue;
            parts.push_back(m);
            part_sum += m;
            choose(m - 1);
            part_sum -= m;
            parts.pop_back();
        }
    };
    choose(N);
    return total;
}

} // namespace macmahon

#endif // MACMAHON_QSERIES_HPP
