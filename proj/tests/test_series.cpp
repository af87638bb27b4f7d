#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "test_util.hpp"

using namespace macmahon;
using testutil::frac;
using testutil::qs;

TEST(Series, AddCancelsAndKeepsIdentity) {
    EXPECT_EQ(ps_add(qs({1, 1}), qs({1, -1})), qs({2, 0}));
    const QSeries f = qs({3, frac(1, 2), -4});
    EXPECT_EQ(ps_add(f, QSeries(2, Rational(0))), f);
}

TEST(Series, AddDropsToSmallerOrder) {
    const QSeries s = qs({1, 2, 3}) + qs({1, 1});
    EXPECT_EQ(s.order(), 1);
    EXPECT_EQ(s, qs({2, 3}));
}

TEST(Series, G2PlusConstantIsSigma1) {
    const QSeries s = eisenstein_g(2, 6) + QSeries::constant(frac(1, 24), 6);
    EXPECT_EQ(s, qs({0, 1, 3, 4, 7, 6, 12}));
}

TEST(Series, MulExamples) {
    EXPECT_EQ(ps_mul(qs({1, 1, 0}), qs({1, -1, 0})), qs({1, 0, -1}));
    const QSeries f = qs({2, -1, frac(3, 7)});
    EXPECT_EQ(ps_mul(f, QSeries::constant(Rational(1), 2)), f);
    const QSeries nq = qs({0, 1, 2, 3, 4, 5});
    EXPECT_EQ(nq * nq, qs({0, 0, 1, 4, 10, 20}));
}

TEST(Series, ExpExamples) {
    const QSeries x = QSeries::monomial(Rational(1), 1, 3);
    EXPECT_EQ(ps_exp(x), qs({1, 1, frac(1, 2), frac(1, 6)}));
    EXPECT_EQ(ps_exp(QSeries(4, Rational(0))), QSeries::constant(Rational(1), 4));
    EXPECT_THROW(ps_exp(qs({1, 1})), NonzeroConstantTerm);
}

TEST(Series, ExpOfEisensteinInX) {
    const int q = 8;
    const QSeries g2 = eisenstein_g(2, q);
    XSeries a(4, QSeries(q, Rational(0)));
    a.coeff_ref(2) = g2;
    const XSeries e = ps_exp(a);
    EXPECT_EQ(e[4], (g2 * g2) * frac(1, 2));
    EXPECT_TRUE(e[3].is_zero());
}

TEST(Series, ComposeExamples) {
    const QSeries x2 = QSeries::monomial(Rational(1), 2, 5);
    const QSeries g = qs({0, 1, 0, frac(1, 24), 0, 0});
    EXPECT_EQ(ps_compose(x2, g)[4], frac(1, 12));

    const QSeries f = qs({1, -2, frac(1, 3), 5, 0, 7});
    EXPECT_EQ(ps_compose(f, QSeries::monomial(Rational(1), 1, 5)), f);

    const QSeries one_plus_x = qs({1, 1, 0, 0, 0, 0});
    const QSeries got = ps_compose(one_plus_x, scale_argument(arcsin_series(5), frac(1, 2)) * Rational(2));
    EXPECT_EQ(got, qs({1, 1, 0, frac(1, 24), 0, frac(3, 640)}));
    EXPECT_THROW(ps_compose(f, qs({1, 1})), NonzeroConstantTerm);
}

TEST(Series, ArcsinMatchesClosedForm) {
    EXPECT_EQ(arcsin_series(5), qs({0, 1, 0, frac(1, 6), 0, frac(3, 40)}));
    const QSeries s = arcsin_series(41);
    for (int j = 0; 2 * j + 1 <= 41; ++j) {
        const Rational expected = Rational(binomial(2 * j, j)) / Rational(ipow(BigInt(4), j) * (2 * j + 1));
        EXPECT_EQ(s[2 * j + 1], expected) << "j=" << j;
        EXPECT_TRUE(s[2 * j].is_zero());
    }
    EXPECT_THROW(arcsin_series(0), std::invalid_argument);
}

TEST(Series, PrefactorExample) {
    const QSeries p = divide_by_x(scale_argument(arcsin_series(5), frac(1, 2)) * Rational(2));
    EXPECT_EQ(p, qs({1, 0, frac(1, 24), 0, frac(3, 640)}));
}

TEST(Series, ShiftAndSubstitute) {
    EXPECT_EQ(shift_up(qs({1, 2}), 2), qs({0, 0, 1, 2}));
    EXPECT_EQ(substitute_power(qs({1, 2, 3, 4, 5}), 2), qs({1, 0, 2, 0, 3}));
    EXPECT_THROW(divide_by_x(qs({1, 1})), NonzeroConstantTerm);
    EXPECT_THROW(QSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST(SeriesProperty, MulCommutativeAssociativeDistributive) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const int order = 1 + trial % 9;
        const QSeries a = testutil::random_series(rng, order);
        const QSeries b = testutil::random_series(rng, order);
        const QSeries c = testutil::random_series(rng, order);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(SeriesProperty, ExpIsAHomomorphism) {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = 1 + trial % 8;
        const QSeries a = testutil::random_series(rng, order, true);
        const QSeries b = testutil::random_series(rng, order, true);
        EXPECT_EQ(ps_exp(a + b), ps_exp(a) * ps_exp(b));
    }
}

TEST(SeriesProperty, ArcsinInvertsSine) {
    for (int order : {1, 2, 7, 16, 25}) {
        const QSeries two_arcsin_half = scale_argument(arcsin_series(order), frac(1, 2)) * Rational(2);
        const QSeries two_sin_half = scale_argument(sin_series(order), frac(1, 2)) * Rational(2);
        const QSeries x = QSeries::monomial(Rational(1), 1, order);
        EXPECT_EQ(ps_compose(two_arcsin_half, two_sin_half), x);
        EXPECT_EQ(ps_compose(two_sin_half, two_arcsin_half), x);
    }
}

TEST(SeriesProperty, ComposeIsAssociativeWithMultiplication) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = 2 + trial % 6;
        const QSeries f = testutil::random_series(rng, order);
        const QSeries h = testutil::random_series(rng, order);
        const QSeries g = testutil::random_series(rng, order, true);
        EXPECT_EQ(ps_compose(f * h, g), ps_compose(f, g) * ps_compose(h, g));
    }
}

TEST(Series, NestedSeriesKeepsInnerOrder) {
    const XSeries a(3, QSeries(5, Rational(0)));
    EXPECT_EQ(inner_order(a * a), 5);
    EXPECT_EQ(inner_order(ps_exp(a)), 5);
}
