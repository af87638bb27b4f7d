#ifndef MACMAHON_RATIONAL_HPP
#define MACMAHON_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace macmahon {

using BigInt = mpz_class;

// Exact rational number, always stored in lowest terms with a positive
// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(long long n) : value_(BigInt(std::to_string(n))) {}
    Rational(const BigInt& n) : value_(n) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or "n"; throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(parse_int(text));
            return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
        } catch (const std::domain_error&) {
            throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
        }
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    /// "p/q", or "n" when the denominator is 1.
    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static BigInt parse_int(std::string_view s) {
        std::string t(s);
        if (t.empty()) throw std::invalid_argument("Rational: empty integer");
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) throw std::invalid_argument("Rational: bad integer '" + t + "'");
        for (std::size_t i = start; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("Rational: bad integer '" + t + "'");
        }
        if (t[0] == '+') t.erase(0, 1);
        return BigInt(t);
    }

    mpq_class value_{0};
};

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rpow(const Rational& base, unsigned e) {
    return Rational(ipow(base.numerator(), e), ipow(base.denominator(), e));
}

} // namespace macmahon

#endif // MACMAHON_RATIONAL_HPP
