#include <gtest/gtest.h>

#include <stdexcept>

#include "test_util.hpp"

using namespace macmahon;
using testutil::frac;

namespace {

std::vector<GeneratorSeries> gens(const std::vector<std::pair<std::string, int>>& spec, int order, bool odd = false) {
    std::vector<GeneratorSeries> out;
    for (const auto& [name, k] : spec) out.push_back({name, k, odd ? eisenstein_g_odd(k, order) : eisenstein_g(k, order)});
    return out;
}

}  // namespace

TEST(MainIdentity, LowOrderCoefficients) {
    const int q = 12;
    std::vector<QSeries> eis{eisenstein_g(2, q), eisenstein_g(4, q)};
    const XSeries rhs = arcsin_exp_rhs(eis, 4, true);
    EXPECT_EQ(rhs[0], QSeries::constant(Rational(1), q));
    EXPECT_EQ(rhs[2], eisenstein_g(2, q) + QSeries::constant(frac(1, 24), q));
    EXPECT_EQ(rhs[2], macmahon_a(1, q));
    EXPECT_TRUE(rhs[1].is_zero());

    std::vector<QSeries> odd{eisenstein_g_odd(2, q), eisenstein_g_odd(4, q)};
    const XSeries rhs_c = arcsin_exp_rhs(odd, 4, false);
    EXPECT_EQ(rhs_c[0], QSeries::constant(Rational(1), q));
    EXPECT_EQ(rhs_c[2], eisenstein_g_odd(2, q));
}

TEST(MainIdentity, PrefactorSeries) {
    const QSeries p = arcsin_prefactor(8);
    for (int j = 0; 2 * j <= 8; ++j) {
        const Rational expected = Rational(binomial(2 * j, j)) / Rational(ipow(BigInt(16), j) * (2 * j + 1));
        EXPECT_EQ(p[2 * j], expected);
    }
    EXPECT_EQ(p[4], frac(3, 640));
}

TEST(MainIdentity, VerifiesInModerateWindow) {
    const auto a = verify_main_a(25, 12);
    EXPECT_TRUE(a.verified());
    EXPECT_FALSE(a.mismatch.has_value());
    EXPECT_EQ(a.identity, "main-a");
    const auto c = verify_main_c(25, 12);
    EXPECT_TRUE(c.verified());
    EXPECT_THROW(verify_main_a(10, 1), std::invalid_argument);
    EXPECT_THROW(verify_main_c(0, 4), std::invalid_argument);
}

TEST(MainIdentity, MismatchIsLocated) {
    XSeries lhs(4, QSeries(6, Rational(0)));
    XSeries rhs = lhs;
    rhs.coeff_ref(4).coeff_ref(5) = Rational(1);
    const auto m = detail::first_mismatch(lhs, rhs);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->x_exponent, 4);
    EXPECT_EQ(m->q_exponent, 5);
    EXPECT_EQ(m->rhs, Rational(1));
}

TEST(Extract, FirstThreePolynomials) {
    const auto a = extract_polynomials(Side::A, 3);
    ASSERT_EQ(a.size(), 3U);
    EXPECT_EQ(a[0].str(), "G2 + 1/24");
    EXPECT_EQ(a[1].str(), "1/8*G2 + 1/2*G2^2 - 1/2*G4 + 3/640");
    EXPECT_EQ(a[2].str(), "37/1920*G2 + 5/48*G2^2 - 5/48*G4 + 1/6*G2^3 - 1/2*G2*G4 + 1/3*G6 + 5/7168");
    EXPECT_EQ(a[1].constant(), frac(3, 640));

    const auto c = extract_polynomials(Side::C, 3);
    EXPECT_EQ(c[0].str(), "Go2");
    EXPECT_EQ(c[1].str(), "1/12*Go2 + 1/2*Go2^2 - 1/2*Go4");
    EXPECT_EQ(c[2].str(), "1/90*Go2 + 1/12*Go2^2 - 1/12*Go4 + 1/6*Go2^3 - 1/2*Go2*Go4 + 1/3*Go6");
}

TEST(Extract, PolynomialsReproduceQExpansion) {
    const int q = 40;
    const auto a = extract_polynomials(Side::A, 4);
    const auto c = extract_polynomials(Side::C, 4);
    std::vector<QSeries> ga;
    std::vector<QSeries> gc;
    for (int j = 1; j <= 4; ++j) {
        ga.push_back(eisenstein_g(2 * j, q));
        gc.push_back(eisenstein_g_odd(2 * j, q));
    }
    for (int r = 1; r <= 4; ++r) {
        EXPECT_EQ(a[static_cast<std::size_t>(r - 1)].evaluate(ga, q), macmahon_a(r, q)) << r;
        EXPECT_EQ(c[static_cast<std::size_t>(r - 1)].evaluate(gc, q), macmahon_c(r, q)) << r;
    }
}

TEST(Express, SolvesSmallCases) {
    const auto r1 = express_in_generators(macmahon_a(1, 24), gens({{"G2", 2}}, 24), 2, 12);
    EXPECT_EQ(r1.expr.str(), "G2 + 1/24");
    EXPECT_FALSE(r1.underdetermined);

    const int q = 20;
    const auto r2 = express_in_generators(macmahon_a(2, 2 * q), gens({{"G2", 2}, {"G4", 4}}, 2 * q), 4, q);
    EXPECT_EQ(r2.expr.str(), "1/8*G2 + 1/2*G2^2 - 1/2*G4 + 3/640");
    EXPECT_EQ(r2.monomials.size(), 4U);
    EXPECT_EQ(r2.expr, extract_polynomials(Side::A, 2)[1]);

    const auto c2 = express_in_generators(macmahon_c(2, 2 * q), gens({{"Go2", 2}, {"Go4", 4}}, 2 * q, true), 4, q);
    EXPECT_EQ(c2.expr.str(), "1/12*Go2 + 1/2*Go2^2 - 1/2*Go4");
}

TEST(Express, Failures) {
    EXPECT_THROW(express_in_generators(macmahon_a(1, 30), {}, 2, 15), NoRepresentation);
    EXPECT_THROW(express_in_generators(macmahon_a(2, 60), gens({{"G2", 2}}, 60), 4, 30), NoRepresentation);
    // Too few equations for the candidate monomials.
    EXPECT_THROW(express_in_generators(macmahon_a(2, 20), gens({{"G2", 2}, {"G4", 4}}, 20), 4, 10), std::invalid_argument);
    // Series not known far enough for the re-verification.
    EXPECT_THROW(express_in_generators(macmahon_a(2, 20), gens({{"G2", 2}, {"G4", 4}}, 20), 4, 20), std::invalid_argument);
}

TEST(Express, FlagsUnderdeterminedSystems) {
    auto g = gens({{"G2", 2}}, 60);
    g.push_back({"H2", 2, eisenstein_g(2, 60)});
    const auto r = express_in_generators(macmahon_a(1, 60), g, 2, 30);
    EXPECT_TRUE(r.underdetermined);
    EXPECT_EQ(r.nullity, 1);
}

TEST(Express, MonomialEnumeration) {
    const auto m = enumerate_monomials({2, 4, 6}, 6);
    EXPECT_EQ(m.size(), 7U);
    EXPECT_TRUE(m.front().is_constant());
    EXPECT_EQ(minimal_solve_order({2, 4}, 4), 14);
}

TEST(Geng22, LowOrderCoefficients) {
    const int q = 10;
    const LambdaTSeries lhs = geng22_lhs(5, q);
    const LambdaTSeries rhs = geng22_rhs(5, q);
    EXPECT_EQ(lhs[1], LambdaQSeries::constant(LambdaPoly(1), q));
    EXPECT_EQ(rhs[1], LambdaQSeries::constant(LambdaPoly(1), q));
    const LambdaQSeries lambda_g2 = detail::with_lambda(eisenstein_g(2, q), 1);
    EXPECT_EQ(lhs[3], lambda_g2);
    EXPECT_EQ(rhs[3], lambda_g2);
    EXPECT_TRUE(lhs[2].is_zero());
}

TEST(Geng22, VerifiesWithHomogeneity) {
    const auto r = verify_geng22(9, 15);
    EXPECT_TRUE(r.verified());
    ASSERT_TRUE(r.lambda_homogeneous.has_value());
    EXPECT_TRUE(*r.lambda_homogeneous);
    EXPECT_THROW(verify_geng22(8, 10), std::invalid_argument);
    EXPECT_THROW(verify_geng22(1, 10), std::invalid_argument);
}

TEST(LambdaPolyTest, Arithmetic) {
    const LambdaPoly l = LambdaPoly::term(Rational(1), 1);
    EXPECT_EQ(LambdaPoly::pi_power(1), l * frac(-1, 4));
    EXPECT_EQ((l * l).homogeneous_degree(), 2);
    EXPECT_FALSE((l + LambdaPoly(1)).homogeneous_degree().has_value());
    EXPECT_TRUE((l - l).is_zero());
}

TEST(Lemma, CombinatorialIdentity) {
    EXPECT_TRUE(lemma_combinatorial_check(1).verified);
    EXPECT_TRUE(lemma_combinatorial_check(50).verified);
    EXPECT_THROW(lemma_combinatorial_check(0), std::invalid_argument);
    // n = 2 by hand: 1/(1! 3!) + 1/(3! 1!) = 1/3 = 2^3/4!
    EXPECT_EQ(frac(1, 6) + frac(1, 6), Rational(8) / Rational(factorial(4)));
}
