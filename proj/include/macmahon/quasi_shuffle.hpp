#ifndef MACMAHON_QUASI_SHUFFLE_HPP
#define MACMAHON_QUASI_SHUFFLE_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace macmahon {

// A word z_{k_1} ... z_{k_r} stored as its letter indices; empty is the unit.
using Word = std::vector<int>;

inline int word_weight(const Word& w) {
    int s = 0;
    for (int k : w) s += k;
    return s;
}

inline std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (int k : w) s += "z" + std::to_string(k);
    return s;
}

// Rational linear combination of words. Zero coefficients are never stored,
// so equality is structural.
class WordCombo {
public:
    WordCombo() = default;
    explicit WordCombo(const Word& w, const Rational& c = Rational(1)) { add(w, c); }

    static WordCombo unit() { return WordCombo(Word{}); }

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Word& w, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    WordCombo& operator+=(const WordCombo& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    WordCombo& operator-=(const WordCombo& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend WordCombo operator+(WordCombo a, const WordCombo& b) { return a += b; }
    friend WordCombo operator-(WordCombo a, const WordCombo& b) { return a -= b; }
    friend WordCombo operator*(WordCombo a, const Rational& c) {
        if (c.is_zero()) return {};
        for (auto& [w, x] : a.terms_) x *= c;
        return a;
    }
    friend bool operator==(const WordCombo&, const WordCombo&) = default;

    /// Prepends letter a to every word.
    WordCombo prefixed(int a) const {
        WordCombo r;
        for (const auto& [w, c] : terms_) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(a);
            nw.insert(nw.end(), w.begin(), w.end());
            r.terms_.emplace(std::move(nw), c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += (c == Rational(1) ? "" : c.str() + "*") + word_str(w);
        }
        return s;
    }

private:
    std::map<Word, Rational> terms_;
};

// Commutative, associative product on letters.
using Diamond = std::function<int(int, int)>;

inline int harmonic_diamond(int a, int b) { return a + b; }

// Quasi-shuffle algebra over letters z_k (k >= 1) with a caller-supplied
// diamond product. Instances hold no mutable state.
class QuasiShuffleAlgebra {
public:
    explicit QuasiShuffleAlgebra(Diamond diamond = harmonic_diamond, int sample_letters = 5) : diamond_(std::move(diamond)) {
        for (int a = 1; a <= sample_letters; ++a) {
            for (int b = 1; b <= sample_letters; ++b) {
                if (diamond_(a, b) != diamond_(b, a)) throw std::invalid_argument("QuasiShuffleAlgebra: diamond is not commutative");
                if (diamond_(a, b) < 1) throw std::invalid_argument("QuasiShuffleAlgebra: diamond must return a letter index >= 1");
                for (int c = 1; c <= sample_letters; ++c) {
                    if (diamond_(diamond_(a, b), c) != diamond_(a, diamond_(b, c))) {
                        throw std::invalid_argument("QuasiShuffleAlgebra: diamond is not associative");
                    }
                }
            }
        }
    }

    int diamond(int a, int b) const { return diamond_(a, b); }

    /// u * v by  aw * bv = a(w * bv) + b(aw * v) + (a<>b)(w * v),  1 * w = w * 1 = w.
    /// Evaluated bottom-up over suffix pairs so shared subproducts are built
    /// once; word-by-word coefficients are counts, so the table holds integers.
    WordCombo product(const Word& u, const Word& v) const {
        using Counts = std::map<Word, long long>;
        const std::size_t m = u.size();
        const std::size_t n = v.size();
        auto prefix_into = [](Counts& out, const Counts& in, int letter) {
            for (const auto& [w, c] : in) {
                Word nw;
                nw.reserve(w.size() + 1);
                nw.push_back(letter);
                nw.insert(nw.end(), w.begin(), w.end());
                out[std::move(nw)] += c;
            }
        };
        // t[i][j] = u[i..] * v[j..]
        std::vector<std::vector<Counts>> t(m + 1, std::vector<Counts>(n + 1));
        for (std::size_t i = m + 1; i-- > 0;) {
            for (std::size_t j = n + 1; j-- > 0;) {
                if (i == m) {
                    t[i][j].emplace(Word(v.begin() + static_cast<std::ptrdiff_t>(j), v.end()), 1);
                } else if (j == n) {
                    t[i][j].emplace(Word(u.begin() + static_cast<std::ptrdiff_t>(i), u.end()), 1);
                } else {
                    prefix_into(t[i][j], t[i + 1][j], u[i]);
                    prefix_into(t[i][j], t[i][j + 1], v[j]);
                    prefix_into(t[i][j], t[i + 1][j + 1], diamond_(u[i], v[j]));
                }
            }
            if (i + 1 <= m) t[i + 1].clear();
        }
        WordCombo r;
        for (const auto& [w, c] : t[0][0]) r.add(w, Rational(static_cast<long>(c)));
        return r;
    }

    /// Bilinear extension to linear combinations.
    WordCombo product(const WordCombo& x, const WordCombo& y) const {
        WordCombo r;
        for (const auto& [u, cu] : x.terms()) {
            for (const auto& [v, cv] : y.terms()) r += product(u, v) * (cu * cv);
        }
        return r;
    }

    /// a * a * ... * a (n factors, single-letter words).
    WordCombo star_power(int a, int n) const {
        if (n < 1) throw std::invalid_argument("star_power: n must be >= 1");
        WordCombo r(Word{a});
        for (int i = 1; i < n; ++i) r = product(r, WordCombo(Word{a}));
        return r;
    }

    /// a <> a <> ... <> a (n factors).
    int diamond_power(int a, int n) const {
        int r = a;
        for (int i = 1; i < n; ++i) r = diamond_(r, a);
        return r;
    }

private:
    Diamond diamond_;
};

struct ExpIdentityVerdict {
    bool verified = true;
    std::optional<int> first_failure;
    WordCombo expected;  // a^n at the failing n
    WordCombo obtained;  // T^n coefficient of the exponential at the failing n
};

/// Checks 1 + sum_n a^n T^n = exp_*( sum_n (-1)^{n-1} a^{<>n} T^n / n ) inside
/// the algebra itself for n = 1..n_max, with exp_* built on the quasi-shuffle
/// product via  n b_n = sum_{k=1}^n k c_k * b_{n-k}.
inline ExpIdentityVerdict exp_identity_check(const QuasiShuffleAlgebra& alg, int a, int n_max) {
    if (n_max < 1) throw std::invalid_argument("exp_identity_check: n_max must be >= 1");
    if (a < 1) throw std::invalid_argument("exp_identity_check: letter index must be >= 1");
    std::vector<WordCombo> log_coeffs(static_cast<std::size_t>(n_max) + 1);
    for (int k = 1; k <= n_max; ++k) {
        log_coeffs[static_cast<std::size_t>(k)] = WordCombo(Word{alg.diamond_power(a, k)}, Rational(k % 2 == 1 ? 1 : -1, k));
    }
    std::vector<WordCombo> b(static_cast<std::size_t>(n_max) + 1);
    b[0] = WordCombo::unit();
    for (int n = 1; n <= n_max; ++n) {
        WordCombo acc;
        for (int k = 1; k <= n; ++k) {
            acc += alg.product(log_coeffs[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(n - k)]) * Rational(k);
        }
        b[static_cast<std::size_t>(n)] = acc * Rational(1, n);
        const WordCombo expected(Word(static_cast<std::size_t>(n), a));
        if (!(b[static_cast<std::size_t>(n)] == expected)) {
            return {false, n, expected, b[static_cast<std::size_t>(n)]};
        }
    }
    return {};
}

} // namespace macmahon

#endif // MACMAHON_QUASI_SHUFFLE_HPP
