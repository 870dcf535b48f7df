#ifndef DEGENMAT_COMBINATORICS_HPP
#define DEGENMAT_COMBINATORICS_HPP

#include <stdexcept>

#include "degenmat/rational.hpp"

namespace degenmat {

inline mpz_class factorial_mpz(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Rational factorial(long n) { return Rational(factorial_mpz(n)); }

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
inline Rational binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("binom requires a nonnegative top index");
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

/// (-1)^k as a rational.
inline Rational alt_sign(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace degenmat

#endif
