#ifndef DEGENMAT_MULTIPOLY_HPP
#define DEGENMAT_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "degenmat/rational.hpp"

namespace degenmat {

/// The fixed symbol universe. Every parameterized quantity in the library is a
/// polynomial in these four symbols; additional parameters (orders, shifts,
/// ranks) are always bound integers.
enum class Sym : std::uint8_t { lambda = 0, mu = 1, x = 2, y = 3 };

inline constexpr std::array<Sym, 4> kAllSyms{Sym::lambda, Sym::mu, Sym::x, Sym::y};

const char* sym_name(Sym s);
std::optional<Sym> sym_from_name(std::string_view name);

/// Exponent vector, indexed by Sym: (e_lambda, e_mu, e_x, e_y).
using Exponents = std::array<std::uint32_t, 4>;

/// Term order used both for canonical storage and for serialization:
/// descending lexicographic on exponents with symbol priority (x, y, lambda, mu).
/// This is the order the printed form of every polynomial follows.
struct TermOrder {
    static std::array<std::uint32_t, 4> key(const Exponents& e) {
        return {e[2], e[3], e[0], e[1]};  // x, y, lambda, mu
    }
    bool operator()(const Exponents& a, const Exponents& b) const { return key(a) > key(b); }
};

/// Sparse multivariate polynomial over Rational in {lambda, mu, x, y}.
/// Invariants: no stored zero coefficients; equal polynomials have identical
/// term maps. Immutable in spirit: all operations return new values.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    MultiPoly() = default;                                 // zero
    MultiPoly(const Rational& c) { set_term({0, 0, 0, 0}, c); }  // NOLINT
    MultiPoly(int c) : MultiPoly(Rational(c)) {}           // NOLINT
    MultiPoly(long c) : MultiPoly(Rational(c)) {}          // NOLINT

    static MultiPoly symbol(Sym s) {
        Exponents e{0, 0, 0, 0};
        e[static_cast<std::size_t>(s)] = 1;
        return monomial(Rational(1), e);
    }
    static MultiPoly monomial(const Rational& c, const Exponents& e) {
        MultiPoly p;
        p.set_term(e, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0});
    }
    /// Coefficient of the constant monomial (zero if absent).
    Rational constant_term() const;
    /// The value of a constant polynomial; throws if non-constant.
    Rational constant_value() const;

    long total_degree() const;   // 0 for the zero polynomial
    long degree(Sym s) const;    // 0 for the zero polynomial
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Exponents& e) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(long k) const;  // k >= 0

    /// Exact partial substitution of symbols by rationals; unbound symbols remain.
    MultiPoly eval(const std::map<Sym, Rational>& bindings) const;

    /// Divides by the symbol s; every term must contain s (NotDivisible otherwise).
    MultiPoly div_exact(Sym s) const;

    /// Canonical text form, e.g. "x^2 - x - 1/6*lambda^2 + 1/6"; "0" for zero.
    std::string str() const;

    /// Parses the canonical text form (sums of rational-coefficient monomials
    /// in lambda, mu, x, y with '*' and '^'). Inverse of str().
    static MultiPoly parse(std::string_view text);

private:
    void set_term(const Exponents& e, const Rational& c) {
        if (!c.is_zero()) terms_[e] = c;
    }
    void add_term(const Exponents& e, const Rational& c);

    TermMap terms_;
};

/// Generalized falling factorial (base|step)_k = base(base-step)...(base-(k-1)step),
/// with (base|step)_0 = 1.
MultiPoly gff(const MultiPoly& base, const MultiPoly& step, long k);

/// (base|step)_k with the leading factor removed: prod_{i=1}^{k-1}(base - i*step)
/// for k >= 1 (and 1 for k = 0). Equals gff(base, step, k) / base without
/// requiring a division.
MultiPoly gff_skip_base(const MultiPoly& base, const MultiPoly& step, long k);

/// Rising factorial <base>_k = base(base+1)...(base+k-1), <base>_0 = 1.
MultiPoly rising(const MultiPoly& base, long k);

/// Shorthands for the four symbols as polynomials.
MultiPoly sym_lambda();
MultiPoly sym_mu();
MultiPoly sym_x();
MultiPoly sym_y();

}  // namespace degenmat

#endif
