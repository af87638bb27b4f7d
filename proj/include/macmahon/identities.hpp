#ifndef MACMAHON_IDENTITIES_HPP
#define MACMAHON_IDENTITIES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "generator_poly.hpp"
#include "lambda_poly.hpp"
#include "linear_solve.hpp"
#include "qseries.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace macmahon {

enum class VerdictStatus { verified, mismatch };

struct Mismatch {
    int x_exponent = 0;
    int q_exponent = 0;
    std::optional<int> lambda_exponent;  // set for Lambda-graded identities
    Rational lhs;
    Rational rhs;
};

struct VerdictReport {
    std::string identity;
    int q_order = 0;
    int x_order = 0;
    VerdictStatus status = VerdictStatus::verified;
    std::optional<Mismatch> mismatch;
    std::optional<bool> lambda_homogeneous;

    bool verified() const { return status == VerdictStatus::verified; }
};

enum class Side { A, C };

// ---------------------------------------------------------------------------
// Shared pieces of the generating-series identities

/// 2 arcsin(X/2).
inline QSeries two_arcsin_half(int x_order) { return scale_argument(arcsin_series(x_order), Rational(1, 2)) * Rational(2); }

/// (2/X) arcsin(X/2) = sum_j binom(2j,j) / (4^j (2j+1) 2^{2j}) X^{2j}.
inline QSeries arcsin_prefactor(int x_order) {
    if (x_order < 0) throw std::invalid_argument("arcsin_prefactor: negative order");
    QSeries s(x_order, Rational(0));
    for (int j = 0; 2 * j <= x_order; ++j) {
        const auto uj = static_cast<unsigned>(j);
        s.coeff_ref(2 * j) = Rational(binomial(2 * uj, uj), ipow(BigInt(16), uj) * (2 * j + 1));
    }
    return s;
}

/// Right-hand side of the generating-series identities over a coefficient
/// ring R: [prefactor] * exp( sum_j (-1)^{j-1}/j c_j (2 arcsin(X/2))^{2j} ),
/// where c_j stands for G_{2j} (or its odd variant) and c_j = values[j-1].
template <class R>
Series<R> arcsin_exp_rhs(const std::vector<R>& values, int x_order, bool with_prefactor) {
    if (values.empty()) throw std::invalid_argument("arcsin_exp_rhs: no Eisenstein values supplied");
    const R& like = values.front();
    Series<R> inner = Series<R>::zero(x_order, like);
    for (int j = 1; 2 * j <= x_order; ++j) {
        if (static_cast<std::size_t>(j) > values.size()) throw std::invalid_argument("arcsin_exp_rhs: too few Eisenstein values");
        inner.coeff_ref(2 * j) = values[static_cast<std::size_t>(j - 1)] * Rational(j % 2 == 1 ? 1 : -1, j);
    }
    const Series<R> composed = ps_compose(inner, lift(two_arcsin_half(x_order), like));
    Series<R> result = ps_exp(composed);
    if (with_prefactor) result = result * lift(arcsin_prefactor(x_order), like);
    return result;
}

namespace detail {

inline std::optional<Mismatch> first_mismatch(const XSeries& lhs, const XSeries& rhs) {
    const int xo = std::min(lhs.order(), rhs.order());
    for (int a = 0; a <= xo; ++a) {
        const int qo = std::min(lhs[a].order(), rhs[a].order());
        for (int b = 0; b <= qo; ++b) {
            if (!(lhs[a][b] == rhs[a][b])) return Mismatch{a, b, std::nullopt, lhs[a][b], rhs[a][b]};
        }
    }
    return std::nullopt;
}

inline void check_window(int q_order, int x_order, const char* who) {
    if (x_order < 2) throw std::invalid_argument(std::string(who) + ": x_order must be >= 2");
    if (q_order < 1) throw std::invalid_argument(std::string(who) + ": q_order must be >= 1");
}

inline VerdictReport verify_main(Side side, int q_order, int x_order) {
    const char* name = side == Side::A ? "main-a" : "main-c";
    check_window(q_order, x_order, name);
    const int r_max = x_order / 2;

    XSeries lhs(x_order, QSeries(q_order, Rational(0)));
    lhs.coeff_ref(0) = QSeries::constant(Rational(1), q_order);
    for (int r = 1; r <= r_max; ++r) lhs.coeff_ref(2 * r) = side == Side::A ? macmahon_a(r, q_order) : macmahon_c(r, q_order);

    std::vector<QSeries> eis;
    for (int j = 1; j <= r_max; ++j) eis.push_back(side == Side::A ? eisenstein_g(2 * j, q_order) : eisenstein_g_odd(2 * j, q_order));
    const XSeries rhs = arcsin_exp_rhs(eis, x_order, side == Side::A);

    VerdictReport report;
    report.identity = name;
    report.q_order = q_order;
    report.x_order = x_order;
    report.mismatch = first_mismatch(lhs, rhs);
    if (report.mismatch) report.status = VerdictStatus::mismatch;
    return report;
}

} // namespace detail

/// 1 + sum_r A_r X^{2r} against (2/X) arcsin(X/2) exp(sum_j (-1)^{j-1}/j G_{2j} (2 arcsin(X/2))^{2j}),
/// coefficientwise in the window X^0..X^x_order, q^0..q^q_order.
inline VerdictReport verify_main_a(int q_order, int x_order) { return detail::verify_main(Side::A, q_order, x_order); }

/// 1 + sum_r C_r X^{2r} against exp(sum_j (-1)^{j-1}/j G°_{2j} (2 arcsin(X/2))^{2j}).
inline VerdictReport verify_main_c(int q_order, int x_order) { return detail::verify_main(Side::C, q_order, x_order); }

/// Generator list G2, G4, ..., G_{2n} (or Go2, ...) with weights 2j.
inline std::vector<Generator> eisenstein_generator_names(Side side, int count) {
    std::vector<Generator> gens;
    for (int j = 1; j <= count; ++j) gens.push_back({(side == Side::A ? "G" : "Go") + std::to_string(2 * j), 2 * j});
    return gens;
}

/// X^{2r} coefficients, r = 1..r_max, of the identity's right-hand side
/// expanded over formal generators G_{2j} (resp. G°_{2j}).
inline std::vector<QuasimodularExpr> extract_polynomials(Side side, int r_max) {
    if (r_max < 1) throw std::invalid_argument("extract_polynomials: r_max must be >= 1");
    std::vector<GeneratorPoly> vars;
    for (int j = 1; j <= r_max; ++j) vars.push_back(GeneratorPoly::variable(static_cast<std::size_t>(j - 1)));
    const Series<GeneratorPoly> rhs = arcsin_exp_rhs(vars, 2 * r_max, side == Side::A);
    const auto gens = eisenstein_generator_names(side, r_max);
    std::vector<QuasimodularExpr> out;
    for (int r = 1; r <= r_max; ++r) out.emplace_back(gens, rhs[2 * r]);
    return out;
}

// ---------------------------------------------------------------------------
// Linear-algebra route to quasimodular expressions

struct GeneratorSeries {
    std::string name;
    int weight = 0;
    QSeries series;
};

struct ExpressResult {
    QuasimodularExpr expr;
    std::vector<Monomial> monomials;  // candidate basis in solve order
    bool underdetermined = false;     // solution space has positive dimension
    int nullity = 0;
    int solve_order = 0;
    int verify_order = 0;
};

/// Extra equations demanded beyond the number of unknowns.
inline constexpr int kSolverMargin = 10;

/// All exponent vectors of total weight <= bound, in graded order.
inline std::vector<Monomial> enumerate_monomials(const std::vector<int>& weights, int bound) {
    for (int w : weights) {
        if (w < 1) throw std::invalid_argument("enumerate_monomials: generator weights must be >= 1");
    }
    std::vector<Monomial> out;
    std::vector<int> exps(weights.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == weights.size()) {
            out.emplace_back(exps);
            return;
        }
        for (int e = 0; e * weights[i] <= left; ++e) {
            exps[i] = e;
            rec(i + 1, left - e * weights[i]);
        }
        exps[i] = 0;
    };
    if (bound >= 0) rec(0, bound);
    std::sort(out.begin(), out.end(), GradedOrder{weights});
    return out;
}

/// Smallest q_order express_in_generators accepts for this candidate set.
inline int minimal_solve_order(const std::vector<int>& weights, int weight_bound) {
    return static_cast<int>(enumerate_monomials(weights, weight_bound).size()) + kSolverMargin;
}

/// Finds rational c_m with target = sum_m c_m * monomial_m(generators) on
/// q^0..q^q_order, over all monomials of weight <= weight_bound, and
/// re-verifies the fit on q^0..q^{2 q_order}. Target and generator series
/// must be known to order 2 q_order.
inline ExpressResult express_in_generators(const QSeries& target, const std::vector<GeneratorSeries>& generators,
                                           int weight_bound, int q_order) {
    std::vector<int> weights;
    std::vector<Generator> gens;
    for (const auto& g : generators) {
        weights.push_back(g.weight);
        gens.push_back({g.name, g.weight});
    }
    const auto monomials = enumerate_monomials(weights, weight_bound);
    const int n = static_cast<int>(monomials.size());
    if (q_order < n + kSolverMargin) {
        throw std::invalid_argument("express_in_generators: q_order " + std::to_string(q_order) + " is below the required " +
                                    std::to_string(n + kSolverMargin) + " for " + std::to_string(n) + " monomials");
    }
    const int verify_order = 2 * q_order;
    if (target.order() < verify_order) throw std::invalid_argument("express_in_generators: target must be known to order 2*q_order");
    for (const auto& g : generators) {
        if (g.series.order() < verify_order) {
            throw std::invalid_argument("express_in_generators: generator " + g.name + " must be known to order 2*q_order");
        }
    }

    // Column series: each monomial evaluated at the generators.
    std::vector<QSeries> columns;
    columns.reserve(monomials.size());
    for (const auto& m : monomials) {
        QSeries col = QSeries::constant(Rational(1), verify_order);
        for (std::size_t i = 0; i < m.exponents().size(); ++i) {
            for (int e = 0; e < m.exponents()[i]; ++e) col = col * generators[i].series.truncated(verify_order);
        }
        columns.push_back(std::move(col));
    }

    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(q_order) + 1, std::vector<Rational>(monomials.size()));
    std::vector<Rational> b(static_cast<std::size_t>(q_order) + 1);
    for (int row = 0; row <= q_order; ++row) {
        for (std::size_t c = 0; c < monomials.size(); ++c) a[static_cast<std::size_t>(row)][c] = columns[c][row];
        b[static_cast<std::size_t>(row)] = target[row];
    }
    const LinearSolution sol = solve_exact(a, b);
    if (!sol.solution) {
        throw NoRepresentation("no representation in the given generators at weight bound " + std::to_string(weight_bound));
    }

    GeneratorPoly poly;
    QSeries fit(verify_order, Rational(0));
    for (std::size_t c = 0; c < monomials.size(); ++c) {
        const Rational& coeff = (*sol.solution)[c];
        if (coeff.is_zero()) continue;
        poly += GeneratorPoly::term(coeff, monomials[c]);
        fit += columns[c] * coeff;
    }
    if (!(fit == target.truncated(verify_order))) {
        throw NoRepresentation("fit on q^0..q^" + std::to_string(q_order) + " does not persist to q^" + std::to_string(verify_order));
    }
    return ExpressResult{QuasimodularExpr(std::move(gens), std::move(poly)), monomials, sol.nullity > 0, sol.nullity, q_order,
                         verify_order};
}

// ---------------------------------------------------------------------------
// Lambda-graded generating series of multiple Eisenstein series G_{2,...,2}

using LambdaQSeries = Series<LambdaPoly>;
using LambdaTSeries = Series<LambdaQSeries>;

namespace detail {

inline LambdaQSeries with_lambda(const QSeries& s, int lambda_exponent) {
    return s.map([&](const Rational& c) { return LambdaPoly::term(c, lambda_exponent); });
}

/// True if the T^{2l+1} coefficient is Lambda-homogeneous of degree l and
/// all even T-coefficients vanish.
inline bool lambda_homogeneous(const LambdaTSeries& s) {
    for (int a = 0; a <= s.order(); ++a) {
        for (const auto& c : s[a].coeffs()) {
            if (c.is_zero()) continue;
            if (a % 2 == 0) return false;
            const auto deg = c.homogeneous_degree();
            if (!deg || *deg != (a - 1) / 2) return false;
        }
    }
    return true;
}

} // namespace detail

/// Left side T exp(sum_k (-1)^{k-1}/k Lambda^k G_{2k}(q) T^{2k}).
inline LambdaTSeries geng22_lhs(int t_order, int q_order) {
    const LambdaQSeries zero(q_order, LambdaPoly{});
    LambdaTSeries inner(t_order - 1, zero);
    for (int k = 1; 2 * k <= t_order - 1; ++k) {
        inner.coeff_ref(2 * k) = detail::with_lambda(eisenstein_g(2 * k, q_order), k) * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return shift_up(ps_exp(inner), 1);
}

/// Z(T) = sum_j zeta({2}^j) T^{2j+1} with zeta({2}^j) = pi^{2j}/(2j+1)!.
inline LambdaTSeries z_series(int t_order, int q_order) {
    const LambdaQSeries zero(q_order, LambdaPoly{});
    LambdaTSeries z(t_order, zero);
    for (int j = 0; 2 * j + 1 <= t_order; ++j) {
        const LambdaPoly zeta = LambdaPoly::pi_power(j) * Rational(BigInt(1), factorial(static_cast<unsigned>(2 * j + 1)));
        z.coeff_ref(2 * j + 1) = LambdaQSeries::constant(zeta, q_order);
    }
    return z;
}

/// Right side sum_l Lambda^l g({2}^l) Z(T)^{2l+1}.
inline LambdaTSeries geng22_rhs(int t_order, int q_order) {
    const LambdaTSeries z = z_series(t_order, q_order);
    const LambdaTSeries z2 = z * z;
    LambdaTSeries power = z;
    LambdaTSeries total = z;
    for (int l = 1; 2 * l + 1 <= t_order; ++l) {
        power = power * z2;
        const LambdaQSeries g = detail::with_lambda(g_series(Index::repeated(2, l), q_order), l);
        total += power.scaled(g);
    }
    return total;
}

/// Checks sum_l G_{{2}^l} T^{2l+1} computed from the exponential formula
/// against sum_l ghat({2}^l) Z(T)^{2l+1}, comparing every T^a Lambda^b q^c.
inline VerdictReport verify_geng22(int t_order, int q_order) {
    if (t_order < 3 || t_order % 2 == 0) throw std::invalid_argument("verify_geng22: t_order must be odd and >= 3");
    if (q_order < 1) throw std::invalid_argument("verify_geng22: q_order must be >= 1");
    const LambdaTSeries lhs = geng22_lhs(t_order, q_order);
    const LambdaTSeries rhs = geng22_rhs(t_order, q_order);

    VerdictReport report;
    report.identity = "geng22";
    report.q_order = q_order;
    report.x_order = t_order;
    for (int a = 0; a <= t_order && !report.mismatch; ++a) {
        for (int c = 0; c <= q_order && !report.mismatch; ++c) {
            const LambdaPoly& l = lhs[a][c];
            const LambdaPoly& r = rhs[a][c];
            if (l == r) continue;
            const LambdaPoly diff = l - r;
            const int b = diff.terms().begin()->first;
            report.mismatch = Mismatch{a, c, b, l.coeff(b), r.coeff(b)};
        }
    }
    report.lambda_homogeneous = detail::lambda_homogeneous(lhs) && detail::lambda_homogeneous(rhs);
    if (report.mismatch || !*report.lambda_homogeneous) report.status = VerdictStatus::mismatch;
    return report;
}

// ---------------------------------------------------------------------------

struct LemmaVerdict {
    bool verified = true;
    std::optional<int> first_failure;
};

/// For 1 <= n <= n_max: sum_{e=1}^n 1/((2e-1)! (2n-2e+1)!) = 2^{2n-1}/(2n)!, and
/// pi^{2n-2} 2^{2n-1}/(2n)! = sum_e zeta({2}^{e-1}) zeta({2}^{n-e}) as Lambda
/// polynomials with zeta({2}^j) = pi^{2j}/(2j+1)!.
inline LemmaVerdict lemma_combinatorial_check(int n_max) {
    if (n_max < 1) throw std::invalid_argument("lemma_combinatorial_check: n_max must be >= 1");
    auto inv_fact = [](int m) { return Rational(BigInt(1), factorial(static_cast<unsigned>(m))); };
    auto zeta_22 = [&](int j) { return LambdaPoly::pi_power(j) * inv_fact(2 * j + 1); };
    for (int n = 1; n <= n_max; ++n) {
        Rational sum(0);
        LambdaPoly zeta_sum;
        for (int e = 1; e <= n; ++e) {
            sum += inv_fact(2 * e - 1) * inv_fact(2 * n - 2 * e + 1);
            zeta_sum += zeta_22(e - 1) * zeta_22(n - e);
        }
        const Rational closed = Rational(ipow(BigInt(2), static_cast<unsigned>(2 * n - 1))) * inv_fact(2 * n);
        if (!(sum == closed) || !(zeta_sum == LambdaPoly::pi_power(n - 1) * closed)) return {false, n};
    }
    return {};
}

} // namespace macmahon

#endif // MACMAHON_IDENTITIES_HPP
