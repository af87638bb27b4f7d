#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "test_util.hpp"

using namespace macmahon;
using testutil::frac;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Plain Gauss-Jordan over Q; returns rank and the reduced augmented matrix.
struct GJ {
    int rank = 0;
    bool consistent = true;
    Matrix rref;
};

GJ gauss_jordan(Matrix a, const std::vector<Rational>& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Rational piv = a[r][c];
        for (auto& x : a[r]) x = x / piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    GJ g;
    g.rank = static_cast<int>(r);
    for (std::size_t i = r; i < rows; ++i) {
        if (!a[i][cols].is_zero()) g.consistent = false;
    }
    g.rref = std::move(a);
    return g;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int rank_cap) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix basis(static_cast<std::size_t>(rank_cap), std::vector<Rational>(cols));
    for (auto& row : basis)
        for (auto& x : row) x = Rational(static_cast<long>(d(rng)), static_cast<long>(den(rng)));
    Matrix m(rows, std::vector<Rational>(cols, Rational(0)));
    for (auto& row : m) {
        for (const auto& brow : basis) {
            const Rational f(static_cast<long>(d(rng)));
            for (std::size_t j = 0; j < cols; ++j) row[j] += f * brow[j];
        }
    }
    return m;
}

}  // namespace

TEST(SolveExact, SmallSystem) {
    const Matrix a{{2, 1}, {1, 3}};
    const auto s = solve_exact(a, {Rational(3), Rational(5)});
    ASSERT_TRUE(s.solution.has_value());
    EXPECT_EQ((*s.solution)[0], frac(4, 5));
    EXPECT_EQ((*s.solution)[1], frac(7, 5));
    EXPECT_EQ(s.rank, 2);
    EXPECT_EQ(s.nullity, 0);
}

TEST(SolveExact, InconsistentAndUnderdetermined) {
    const Matrix a{{1, 1}, {2, 2}};
    EXPECT_FALSE(solve_exact(a, {Rational(1), Rational(3)}).solution.has_value());
    const auto s = solve_exact(a, {Rational(1), Rational(2)});
    ASSERT_TRUE(s.solution.has_value());
    EXPECT_EQ(s.nullity, 1);
    EXPECT_THROW(solve_exact(a, {Rational(1)}), std::invalid_argument);
}

TEST(SolveExact, AgreesWithGaussJordan) {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t rows = 1 + trial % 7;
        const std::size_t cols = 1 + (trial / 7) % 6;
        const int rank_cap = 1 + trial % static_cast<int>(std::min(rows, cols));
        const Matrix a = random_matrix(rng, rows, cols, rank_cap);
        std::vector<Rational> b(rows, Rational(0));
        std::uniform_int_distribution<int> d(-4, 4);
        if (trial % 2 == 0) {
            std::vector<Rational> x(cols);
            for (auto& v : x) v = Rational(static_cast<long>(d(rng)), 3L);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) b[i] += a[i][j] * x[j];
        } else {
            for (auto& v : b) v = Rational(static_cast<long>(d(rng)));
        }
        const auto ours = solve_exact(a, b);
        const GJ ref = gauss_jordan(a, b);
        EXPECT_EQ(ours.rank, ref.rank);
        EXPECT_EQ(ours.solution.has_value(), ref.consistent);
        if (ours.solution) {
            EXPECT_EQ(ours.nullity, static_cast<int>(cols) - ref.rank);
            for (std::size_t i = 0; i < rows; ++i) {
                Rational lhs(0);
                for (std::size_t j = 0; j < cols; ++j) lhs += a[i][j] * (*ours.solution)[j];
                EXPECT_EQ(lhs, b[i]);
            }
        }
    }
}
