#ifndef MACMAHON_LINEAR_SOLVE_HPP
#define MACMAHON_LINEAR_SOLVE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace macmahon {

struct LinearSolution {
    std::optional<std::vector<Rational>> solution;  // empty when inconsistent
    int rank = 0;
    int nullity = 0;  // dimension of the solution space when consistent
};

/// Solves A x = b exactly. Each row is scaled to integers, then reduced to
/// echelon form with fraction-free (Bareiss) elimination, taking the first
/// nonzero entry as pivot. Free variables are set to zero.
inline LinearSolution solve_exact(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solve_exact: right-hand side has the wrong length");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a) {
        if (row.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");
    }

    // Augmented integer matrix; column `cols` is the right-hand side.
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt scale(1);
        for (std::size_t j = 0; j <= cols; ++j) {
            const BigInt den = (j < cols ? a[i][j] : b[i]).denominator();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j <= cols; ++j) {
            const Rational& x = j < cols ? a[i][j] : b[i];
            m[i][j] = x.numerator() * (scale / x.denominator());
        }
    }

    BigInt prev(1);
    std::size_t r = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j <= cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    LinearSolution result;
    result.rank = static_cast<int>(r);
    for (std::size_t i = r; i < rows; ++i) {
        if (m[i][cols] != 0) return result;
    }
    result.nullity = static_cast<int>(cols - r);

    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t c = pivot_cols[k];
        Rational acc(m[k][cols]);
        for (std::size_t j = c + 1; j < cols; ++j) {
            if (m[k][j] != 0 && !x[j].is_zero()) acc -= Rational(m[k][j]) * x[j];
        }
        x[c] = acc / Rational(m[k][c]);
    }
    result.solution = std::move(x);
    return result;
}

} // namespace macmahon

#endif // MACMAHON_LINEAR_SOLVE_HPP
