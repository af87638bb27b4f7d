#ifndef MACMAHON_LAMBDA_POLY_HPP
#define MACMAHON_LAMBDA_POLY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace macmahon {

// Polynomial in the formal symbol Lambda = (2 pi i)^2 with rational
// coefficients. pi^2 is represented as -Lambda/4. No zero entries are stored.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(int c) : LambdaPoly(Rational(c)) {}
    LambdaPoly(const Rational& c) {
        if (!c.is_zero()) terms_[0] = c;
    }

    /// c * Lambda^exponent.
    static LambdaPoly term(const Rational& c, int exponent) {
        if (exponent < 0) throw std::invalid_argument("LambdaPoly: negative exponent");
        LambdaPoly p;
        if (!c.is_zero()) p.terms_[exponent] = c;
        return p;
    }

    /// pi^{2j} = (-Lambda/4)^j.
    static LambdaPoly pi_power(int j) { return term(rpow(Rational(-1, 4), static_cast<unsigned>(j)), j); }

    const std::map<int, Rational>& terms() const { return terms_; }

    Rational coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }

    /// Degree d if every stored term has exponent d; nullopt for zero or mixed.
    std::optional<int> homogeneous_degree() const {
        if (terms_.size() != 1) return std::nullopt;
        return terms_.begin()->first;
    }

    LambdaPoly& operator+=(const LambdaPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LambdaPoly& operator-=(const LambdaPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator-(LambdaPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
        LambdaPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        }
        return r;
    }
    friend LambdaPoly operator*(LambdaPoly a, const Rational& c) {
        if (c.is_zero()) return {};
        for (auto& [e, x] : a.terms_) x *= c;
        return a;
    }
    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += e == 0 ? c.str() : c.str() + "*L^" + std::to_string(e);
        }
        return out;
    }

private:
    void add_term(int e, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<int, Rational> terms_;
};

} // namespace macmahon

#endif // MACMAHON_LAMBDA_POLY_HPP
