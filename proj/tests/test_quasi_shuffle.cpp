#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "test_util.hpp"

using namespace macmahon;
using testutil::frac;

namespace {

// Truncated multiple harmonic sum  sum_{N >= m_1 > ... > m_r >= 1} prod m_i^{-k_i};
// the harmonic product is multiplicative for it, which gives an oracle.
Rational harmonic_sum(const Word& w, int N) {
    // s[j][m]: sum over tails w[j..] with first index m_j < m
    std::vector<Rational> tail(static_cast<std::size_t>(N) + 2, Rational(1));
    for (std::size_t j = w.size(); j-- > 0;) {
        std::vector<Rational> next(static_cast<std::size_t>(N) + 2, Rational(0));
        Rational acc(0);
        for (int m = 1; m <= N + 1; ++m) {
            next[static_cast<std::size_t>(m)] = acc;
            Rational p(1);
            for (int e = 0; e < w[j]; ++e) p *= Rational(m);
            acc += tail[static_cast<std::size_t>(m)] / p;
        }
        tail = std::move(next);
    }
    return tail[static_cast<std::size_t>(N) + 1];
}

Rational harmonic_sum(const WordCombo& c, int N) {
    Rational s(0);
    for (const auto& [w, x] : c.terms()) s += x * harmonic_sum(w, N);
    return s;
}

Word random_word(std::mt19937& rng, int min_len) {
    std::uniform_int_distribution<int> len(min_len, 4);
    std::uniform_int_distribution<int> letter(1, 5);
    Word w(static_cast<std::size_t>(len(rng)));
    for (int& x : w) x = letter(rng);
    return w;
}

}  // namespace

TEST(QuasiShuffle, Examples) {
    const QuasiShuffleAlgebra alg;
    WordCombo z22 = WordCombo(Word{2, 2}, Rational(2)) + WordCombo(Word{4});
    EXPECT_EQ(alg.product(Word{2}, Word{2}), z22);
    EXPECT_EQ(alg.product(Word{}, Word{5, 3}), WordCombo(Word{5, 3}));
    EXPECT_EQ(alg.product(Word{2}, Word{3}), WordCombo(Word{2, 3}) + WordCombo(Word{3, 2}) + WordCombo(Word{5}));
    EXPECT_EQ(alg.star_power(2, 2), z22);
    EXPECT_EQ(alg.star_power(2, 1), WordCombo(Word{2}));
    EXPECT_EQ(alg.star_power(2, 3).coeff(Word{2, 2, 2}), Rational(6));
    EXPECT_EQ(z22.str(), "2*z2z2 + z4");
    EXPECT_EQ(WordCombo::unit().str(), "1");
}

TEST(QuasiShuffle, RejectsBadDiamond) {
    EXPECT_THROW(QuasiShuffleAlgebra([](int a, int b) { return a + 2 * b; }), std::invalid_argument);
    EXPECT_THROW(QuasiShuffleAlgebra([](int a, int b) { return a * b + 1; }), std::invalid_argument);
    EXPECT_THROW(QuasiShuffleAlgebra([](int a, int b) { return a - b; }), std::invalid_argument);
    EXPECT_NO_THROW(QuasiShuffleAlgebra([](int a, int b) { return std::max(a, b); }));
}

TEST(QuasiShuffleProperty, CommutativeAndAssociative) {
    const QuasiShuffleAlgebra alg;
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 250; ++trial) {
        const Word u = random_word(rng, 0);
        const Word v = random_word(rng, 0);
        const Word w = random_word(rng, 0);
        EXPECT_EQ(alg.product(u, v), alg.product(v, u));
        const WordCombo left = alg.product(alg.product(u, v), WordCombo(w));
        const WordCombo right = alg.product(WordCombo(u), alg.product(v, w));
        EXPECT_EQ(left, right) << word_str(u) << " " << word_str(v) << " " << word_str(w);
    }
}

TEST(QuasiShuffleProperty, WeightDepthAndSubspaceClosure) {
    const QuasiShuffleAlgebra alg;
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Word u = random_word(rng, 1);
        const Word v = random_word(rng, 1);
        const WordCombo p = alg.product(u, v);
        ASSERT_FALSE(p.is_zero());
        const bool admissible = u.front() >= 2 && v.front() >= 2;
        const bool all_ge2 = Index(u).h2() && Index(v).h2();
        for (const auto& [w, c] : p.terms()) {
            EXPECT_EQ(word_weight(w), word_weight(u) + word_weight(v));
            EXPECT_GE(w.size(), std::max(u.size(), v.size()));
            EXPECT_LE(w.size(), u.size() + v.size());
            EXPECT_GT(c, Rational(0));
            if (admissible) EXPECT_TRUE(Index(w).admissible());
            if (all_ge2) EXPECT_TRUE(Index(w).h2());
        }
    }
}

TEST(QuasiShuffleProperty, MultiplicativeOnHarmonicSums) {
    const QuasiShuffleAlgebra alg;
    std::mt19937 rng(4321);
    for (int trial = 0; trial < 40; ++trial) {
        const Word u = random_word(rng, 1);
        const Word v = random_word(rng, 1);
        EXPECT_EQ(harmonic_sum(u, 7) * harmonic_sum(v, 7), harmonic_sum(alg.product(u, v), 7));
    }
}

TEST(ExpIdentity, Examples) {
    const QuasiShuffleAlgebra alg;
    EXPECT_TRUE(exp_identity_check(alg, 2, 1).verified);
    // n = 2:  z2z2 = (z2 * z2 - z4)/2
    const WordCombo rhs = (alg.product(Word{2}, Word{2}) - WordCombo(Word{4})) * frac(1, 2);
    EXPECT_EQ(rhs, WordCombo(Word{2, 2}));
    EXPECT_TRUE(exp_identity_check(alg, 2, 5).verified);
    EXPECT_TRUE(exp_identity_check(alg, 3, 5).verified);
    EXPECT_TRUE(exp_identity_check(alg, 1, 6).verified);
    EXPECT_THROW(exp_identity_check(alg, 2, 0), std::invalid_argument);
}

TEST(ExpIdentity, HoldsForAnyAdmissibleDiamond) {
    // The identity only uses commutativity and associativity of the diamond.
    const QuasiShuffleAlgebra alg([](int a, int b) { return std::max(a, b); });
    EXPECT_TRUE(exp_identity_check(alg, 2, 5).verified);
    const QuasiShuffleAlgebra gcd_like([](int a, int b) { return std::min(a, b); });
    EXPECT_TRUE(exp_identity_check(gcd_like, 3, 5).verified);
}
