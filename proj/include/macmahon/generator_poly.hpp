#ifndef MACMAHON_GENERATOR_POLY_HPP
#define MACMAHON_GENERATOR_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "series.hpp"

namespace macmahon {

// Exponent vector over an ordered generator list. Trailing zeros are trimmed
// so that equal monomials compare equal; the empty vector is the constant 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        for (int e : exps_) {
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        }
        trim();
    }

    static Monomial variable(std::size_t index) {
        std::vector<int> e(index + 1, 0);
        e[index] = 1;
        return Monomial(std::move(e));
    }

    int exponent(std::size_t i) const { return i < exps_.size() ? exps_[i] : 0; }
    const std::vector<int>& exponents() const { return exps_; }
    bool is_constant() const { return exps_.empty(); }

    int weight(const std::vector<int>& generator_weights) const {
        int w = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) w += exps_[i] * generator_weights.at(i);
        return w;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        std::vector<int> e(std::max(a.exps_.size(), b.exps_.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponent(i) + b.exponent(i);
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    void trim() {
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }

    std::vector<int> exps_;
};

// Graded order: ascending weight, then exponent vectors in descending
// lexicographic order (G2^2 before G4).
struct GradedOrder {
    std::vector<int> weights;

    bool operator()(const Monomial& a, const Monomial& b) const {
        const int wa = a.weight(weights);
        const int wb = b.weight(weights);
        if (wa != wb) return wa < wb;
        const std::size_t n = std::max(a.exponents().size(), b.exponents().size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
        }
        return false;
    }
};

// Polynomial with rational coefficients in commuting generators; the
// generator names and weights live with the caller (see QuasimodularExpr).
class GeneratorPoly {
public:
    GeneratorPoly() = default;
    GeneratorPoly(int c) : GeneratorPoly(Rational(c)) {}
    GeneratorPoly(const Rational& c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }

    static GeneratorPoly term(const Rational& c, Monomial m) {
        GeneratorPoly p;
        if (!c.is_zero()) p.terms_[std::move(m)] = c;
        return p;
    }
    static GeneratorPoly variable(std::size_t index) { return term(Rational(1), Monomial::variable(index)); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant() const { return coeff(Monomial{}); }

    GeneratorPoly& operator+=(const GeneratorPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GeneratorPoly& operator-=(const GeneratorPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend GeneratorPoly operator+(GeneratorPoly a, const GeneratorPoly& b) { return a += b; }
    friend GeneratorPoly operator-(GeneratorPoly a, const GeneratorPoly& b) { return a -= b; }
    friend GeneratorPoly operator-(GeneratorPoly a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend GeneratorPoly operator*(const GeneratorPoly& a, const GeneratorPoly& b) {
        GeneratorPoly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        }
        return r;
    }
    friend GeneratorPoly operator*(GeneratorPoly a, const Rational& c) {
        if (c.is_zero()) return {};
        for (auto& [m, x] : a.terms_) x *= c;
        return a;
    }
    friend bool operator==(const GeneratorPoly& a, const GeneratorPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Monomial, Rational> terms_;
};

struct Generator {
    std::string name;
    int weight = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Polynomial in named, weighted generators, e.g. 3/640 + 1/8*G2 + ...
class QuasimodularExpr {
public:
    QuasimodularExpr(std::vector<Generator> generators, GeneratorPoly poly)
        : generators_(std::move(generators)), poly_(std::move(poly)) {
        for (const auto& [m, c] : poly_.terms()) {
            if (m.exponents().size() > generators_.size()) {
                throw std::invalid_argument("QuasimodularExpr: monomial references an unknown generator");
            }
        }
    }

    const std::vector<Generator>& generators() const { return generators_; }
    const GeneratorPoly& poly() const { return poly_; }
    Rational constant() const { return poly_.constant(); }

    std::vector<int> weights() const {
        std::vector<int> w;
        for (const auto& g : generators_) w.push_back(g.weight);
        return w;
    }

    /// Non-constant monomials in graded order, constant last.
    std::vector<std::pair<Monomial, Rational>> ordered_terms() const {
        std::vector<std::pair<Monomial, Rational>> out(poly_.terms().begin(), poly_.terms().end());
        const GradedOrder order{weights()};
        std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
            if (a.first.is_constant() != b.first.is_constant()) return b.first.is_constant();
            return order(a.first, b.first);
        });
        return out;
    }

    /// Monomial text such as "G2^2*G4"; empty for the constant monomial.
    std::string monomial_str(const Monomial& m) const {
        std::string out;
        for (std::size_t i = 0; i < m.exponents().size(); ++i) {
            const int e = m.exponents()[i];
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += generators_[i].name;
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    std::string str() const {
        const auto terms = ordered_terms();
        if (terms.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms) {
            const bool negative = c.sign() < 0;
            const Rational mag = negative ? -c : c;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            if (m.is_constant()) {
                out += mag.str();
            } else if (mag == Rational(1)) {
                out += monomial_str(m);
            } else {
                out += mag.str() + "*" + monomial_str(m);
            }
        }
        return out;
    }

    /// Substitutes q-series for the generators (same order as generators()).
    QSeries evaluate(const std::vector<QSeries>& values, int q_order) const {
        if (values.size() < generators_.size()) throw std::invalid_argument("QuasimodularExpr::evaluate: missing generator values");
        QSeries total(q_order, Rational(0));
        for (const auto& [m, c] : poly_.terms()) {
            QSeries term = QSeries::constant(c, q_order);
            for (std::size_t i = 0; i < m.exponents().size(); ++i) {
                for (int e = 0; e < m.exponents()[i]; ++e) term = term * values[i];
            }
            total += term;
        }
        return total;
    }

    friend bool operator==(const QuasimodularExpr& a, const QuasimodularExpr& b) {
        return a.generators_ == b.generators_ && a.poly_ == b.poly_;
    }

private:
    std::vector<Generator> generators_;
    GeneratorPoly poly_;
};

} // namespace macmahon

#endif // MACMAHON_GENERATOR_POLY_HPP
