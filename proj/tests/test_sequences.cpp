#include <cstdlib>

#include "degenmat/combinatorics.hpp"
#include "degenmat/errors.hpp"
#include "degenmat/sequences.hpp"
#include "doctest.h"

using namespace degenmat;

namespace {

const MultiPoly L = sym_lambda();
const MultiPoly U = sym_mu();
const MultiPoly X = sym_x();
const MultiPoly Y = sym_y();
const MultiPoly One(Rational(1));
const MultiPoly Zero;

MultiPoly P(const char* text) { return MultiPoly::parse(text); }

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("degenerate Bernoulli polynomials, first kind") {
    CHECK(beta(1, 1, L, X) == P("x + 1/2*lambda - 1/2"));
    for (long w = -2; w <= 3; ++w) CHECK(beta(0, w, L, X) == One);
    CHECK(beta(4, 1, L, Zero) == P("-19/30*lambda^4 + 2/3*lambda^2 - 1/30"));
    CHECK(beta(2, 2, Zero, Zero) == MultiPoly(Rational(5, 6)));
}

TEST_CASE("the first few beta polynomials match the listed ones") {
    const char* listed[] = {
        "1",
        "x + 1/2*lambda - 1/2",
        "x^2 - x - 1/6*lambda^2 + 1/6",
        "x^3 - 3/2*x^2*lambda - 3/2*x^2 + 3/2*x*lambda + 1/2*x + 1/4*lambda^3 - 1/4*lambda",
        "x^4 - 4*x^3*lambda - 2*x^3 + 4*x^2*lambda^2 + 6*x^2*lambda + x^2 - 4*x*lambda^2 "
        "- 2*x*lambda - 19/30*lambda^4 + 2/3*lambda^2 - 1/30",
    };
    for (long m = 0; m <= 4; ++m) CHECK(beta(m, 1, L, X) == P(listed[m]));
}

TEST_CASE("degenerate Bernoulli polynomials, second kind") {
    CHECK(alpha(2, 0, L, MultiPoly(Rational(3))) == MultiPoly(Rational(6)));
    for (long m = 0; m <= 5; ++m) {
        for (long w = -1; w <= 2; ++w) {
            CHECK(alpha(m, w, Zero, X) == factorial(m) * bernoulli_second(m, w, X));
        }
    }
    // Parameter inversion at a rational point: alpha_2^{(1)}(2,0) = 2^2 beta_2^{(1)}(1/2,0).
    CHECK(alpha(2, 1, MultiPoly(Rational(2)), Zero) ==
          Rational(4) * beta(2, 1, MultiPoly(Rational(1, 2)), Zero));
}

TEST_CASE("generalized Stirling numbers") {
    CHECK(stirling1_gen(4, 1, StirlingParams(1, 0, 1)) == MultiPoly(Rational(2)));
    for (long m = 0; m <= 6; ++m) {
        CHECK(stirling1_gen(m, m, StirlingParams(U, L, X)) == One);
        CHECK(stirling2_gen(m, m, StirlingParams(U, L, X)) == One);
    }
    CHECK(stirling1_gen(4, 2, StirlingParams(1, 0, 0)) == MultiPoly(Rational(11)));
    CHECK(stirling2_gen(4, 2, StirlingParams(1, 0, 0)) == MultiPoly(Rational(7)));
    CHECK(stirling2_gen(4, 2, StirlingParams(1, -1, 0)) == MultiPoly(Rational(36)));
    CHECK(stirling2_gen(2, 5, StirlingParams(U, L, X)).is_zero());
    CHECK_THROWS_AS(StirlingParams(0, 0, 0), BadParams);
    CHECK_THROWS_AS(StirlingParams(Zero, Zero, Zero), BadParams);
}

TEST_CASE("classical views") {
    CHECK(stirling2(4, 2) == Rational(7));
    CHECK(stirling1(4, 2) == Rational(11));
    CHECK(stirling1(5, 2) == Rational(-50));
    CHECK(lah(4, 2) == Rational(36));
    CHECK(lah(0, 0) == Rational(1));
    CHECK(lah(3, 0) == Rational(0));
    CHECK(MultiPoly(lah(4, 2)) == stirling2_gen(4, 2, StirlingParams(1, -1, 0)));
    for (long m = 1; m <= 5; ++m) {
        for (long k = 0; k <= m; ++k) {
            const Rational unsigned1 = alt_sign(m - k) * stirling1(m, k);
            CHECK(r_stirling1(m, k, 0) == unsigned1);
            CHECK(r_stirling1(m, k, 1) == unsigned1);
            CHECK(r_stirling2(m, k, 0) == stirling2(m, k));
            CHECK(r_stirling2(m, k, 1) == stirling2(m, k));
        }
    }
    // Howard's numbers at lambda = 0 are Carlitz's weighted numbers.
    for (long m = 0; m <= 4; ++m)
        for (long k = 0; k <= m; ++k) {
            CHECK(howard1(m, k, Zero, X) == carlitz_r1(m, k, X));
            CHECK(howard2(m, k, Zero, X) == carlitz_r2(m, k, X));
            CHECK(carlitz_r2(m, k, Zero) == MultiPoly(stirling2(m, k)));
            CHECK(degen_stirling2(m, k, Zero) == MultiPoly(stirling2(m, k)));
        }
}

TEST_CASE("higher order Bernoulli polynomials") {
    CHECK(bernoulli_classic(2, 1, Zero) == MultiPoly(Rational(1, 6)));
    for (long m = 0; m <= 6; ++m) CHECK(bernoulli_classic(m, 0, X) == X.pow(m));
    CHECK(bernoulli_classic(1, 1, X) == P("x - 1/2"));
}

TEST_CASE("Bernoulli polynomials of the second kind") {
    for (long w = -1; w <= 3; ++w) CHECK(bernoulli_second(0, w, X) == One);
    CHECK(bernoulli_second(1, 1, Zero) == MultiPoly(Rational(1, 2)));
    CHECK(bernoulli_second(2, 0, MultiPoly(Rational(3))) == MultiPoly(Rational(3)));
}

TEST_CASE("hyperharmonic numbers") {
    CHECK(hyperharmonic(3, 0) == Rational(1, 3));
    CHECK(hyperharmonic(3, 1) == Rational(11, 6));
    CHECK(hyperharmonic(2, -1) == Rational(0));
    CHECK(hyperharmonic(0, 4) == Rational(0));
    // H_m^r = sum_{k<=m} H_k^{r-1}
    for (long m = 1; m <= 6; ++m) {
        for (long r = 1; r <= 4; ++r) {
            Rational acc;
            for (long k = 1; k <= m; ++k) acc += hyperharmonic(k, r - 1);
            CHECK(hyperharmonic(m, r) == acc);
        }
    }
}

TEST_CASE("recurrence oracle agrees with the generating-function path") {
    CHECK(stirling_by_recurrence(1, 0, 0, StirlingParams(1, 0, 0)) == One);
    const StirlingParams classical(1, 0, 0);
    for (long m = 0; m <= 6; ++m) {
        for (long k = 0; k <= m; ++k) {
            CHECK(stirling_by_recurrence(1, m, k, classical) == stirling1_gen(m, k, classical));
            CHECK(stirling_by_recurrence(2, m, k, classical) == stirling2_gen(m, k, classical));
        }
    }
    const StirlingParams symbolic(One, L, X);
    for (long m = 0; m <= 5; ++m) {
        for (long k = 0; k <= m; ++k) {
            CHECK(stirling_by_recurrence(1, m, k, symbolic) == stirling1_gen(m, k, symbolic));
            CHECK(stirling_by_recurrence(2, m, k, symbolic) == stirling2_gen(m, k, symbolic));
        }
    }
}

TEST_CASE("combinatorial enumeration oracles") {
    for (int m = 0; m <= 6; ++m) {
        for (int k = 0; k <= m; ++k) {
            CHECK(MultiPoly(Rational(count_set_partitions(m, k))) ==
                  stirling2_gen(m, k, StirlingParams(1, 0, 0)));
            CHECK(Rational(count_cycle_permutations(m, k)) ==
                  alt_sign(m - k) * stirling1(m, k));
        }
    }
    CHECK(count_r_partitions(4, 2, 2) == 4);        // split {3,4} over the two blocks
    CHECK(count_r_cycle_permutations(4, 2, 2) == 6);  // 4 of type (3,1) + 2 of type (2,2)
    for (int r = 0; r <= 2; ++r)
        for (int m = r; m <= 6; ++m)
            for (int k = r; k <= m; ++k) {
                CHECK(Rational(count_r_partitions(m, k, r)) == r_stirling2(m, k, r));
                CHECK(Rational(count_r_cycle_permutations(m, k, r)) == r_stirling1(m, k, r));
            }
}

TEST_CASE("order convolution spot checks") {
    for (long m = 0; m <= 4; ++m) {
        for (long w : {-1L, 0L, 2L}) {
            for (long z : {0L, 1L}) {
                MultiPoly rhs;
                for (long k = 0; k <= m; ++k)
                    rhs += binom(m, k) * (beta(k, w, L, X) * beta(m - k, z, L, Y));
                CHECK(beta(m, w + z, L, X + Y) == rhs);
            }
        }
    }
}

TEST_CASE("negative order matches the Stirling bridge") {
    for (long h = 0; h <= 3; ++h) {
        for (long m = 0; m <= 4; ++m) {
            CHECK(beta(m, -h, L, X) ==
                  Rational(1) / binom(m + h, h) *
                      stirling2_gen(m + h, h, StirlingParams(One, L, -X)));
            CHECK(alpha(m, -h, L, X) ==
                  Rational(1) / binom(m + h, h) *
                      stirling1_gen(m + h, h, StirlingParams(One, L, X)));
        }
    }
}

TEST_CASE("rising factorial closed form at lambda = -1") {
    CHECK(beta(3, 1, -One, X) == rising(X - One, 3));
    for (long m = 1; m <= 6; ++m)
        for (long r = 0; r <= 4; ++r)
            CHECK(MultiPoly(factorial(m) * hyperharmonic(m, r)) ==
                  MultiPoly(r_stirling1(m + r, 1 + r, r)));
}

}
