#ifndef DEGENMAT_RATIONAL_HPP
#define DEGENMAT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include "degenmat/errors.hpp"

namespace degenmat {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}                // NOLINT(google-explicit-constructor)
    Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(long long n) : q_(mpz_class(std::to_string(n))) {}  // NOLINT
    explicit Rational(const mpz_class& n) : q_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw DivisionByZero();
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    /// Parses "p" or "p/q" (optional leading '-'). Anything else is a ParseError.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { Rational r; r.q_ = ::abs(q_); return r; }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw DivisionByZero();
            return (Rational(1) / *this).pow(-e);
        }
        Rational result(1), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

inline Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) throw ParseError("expected rational, got \"" + s + "\"");
    if (i < s.size()) {
        if (s[i] != '/') throw ParseError("expected rational, got \"" + s + "\"");
        ++i;
        digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
        if (digits == 0 || i != s.size())
            throw ParseError("expected rational, got \"" + s + "\"");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("expected rational, got \"" + s + "\"");
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
}

}  // namespace degenmat

#endif
