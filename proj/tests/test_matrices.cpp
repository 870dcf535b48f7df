#include "degenmat/combinatorics.hpp"
#include "degenmat/errors.hpp"
#include "degenmat/families.hpp"
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

TEST_SUITE("matrices") {

TEST_CASE("pascal matrix entries") {
    const LowerTri p4 = pascal(4, L, X);
    CHECK(p4.at(4, 2) == P("3*x^2 - 3*x*lambda"));
    CHECK(p4.at(4, 1) == P("x^3 - 3*x^2*lambda + 2*x*lambda^2"));
    CHECK(p4.at(2, 4).is_zero());

    CHECK(pascal(5, L, Zero) == LowerTri::identity(5));

    const LowerTri num = pascal(3, Zero, MultiPoly(Rational(2)));
    CHECK(num.at(2, 1) == MultiPoly(Rational(2)));
    CHECK(num.at(3, 1) == MultiPoly(Rational(4)));
    CHECK(num.at(3, 2) == MultiPoly(Rational(4)));
    CHECK(num.at(3, 3) == One);
}

TEST_CASE("t matrix entries") {
    CHECK(t_matrix(3, L, X).at(3, 1) == L * X);
    CHECK(t_matrix(3, One, MultiPoly(Rational(2))).at(3, 1) == MultiPoly(Rational(2)));
    CHECK(t_matrix(4, L, X).at(4, 1) == -factorial(2) * (L.pow(2) * X));
}

TEST_CASE("r matrix at rational bindings") {
    const LowerTri r = r_matrix(6, Rational(1, 2), Rational(3));
    for (long i = 1; i <= 6; ++i) CHECK(r.at(i, i) == One);
    const LowerTri t = t_matrix(6, MultiPoly(Rational(1, 2)), MultiPoly(Rational(3)));
    CHECK(r.mul(t) == LowerTri::identity(6));
    CHECK(t.inv() == r);
    // (x - lambda|lambda)_2 = (2-1)(2-2) = 0 at lambda = 1, x = 2.
    CHECK_THROWS_AS(r_matrix(4, Rational(1), Rational(2)), ZeroDenominator);
    // The polynomial form agrees with the ratio form wherever the latter exists.
    CHECK(r_matrix_poly(6, MultiPoly(Rational(1, 2)), MultiPoly(Rational(3))) == r);
}

TEST_CASE("matrix algebra basics") {
    const LowerTri p = pascal(4, L, X);
    CHECK(p.pow(0) == LowerTri::identity(4));
    CHECK(p.inv() == pascal(4, L, -X));
    CHECK(p.inv().mul(p) == LowerTri::identity(4));
    CHECK(pbar(3, L, X) == LowerTri::identity(1).direct_sum(pascal(3, L, X)));

    CHECK_THROWS_AS(p.mul(pascal(3, L, X)), SizeMismatch);
    LowerTri bad = LowerTri::identity(3);
    bad.set(2, 2, MultiPoly(Rational(2)));
    CHECK_THROWS_AS(bad.inv(), NonUnitDiagonal);
    CHECK_THROWS_AS(bad.pow(-1), NonUnitDiagonal);
}

TEST_CASE("summation factorization at bindings and symbolically") {
    const Rational lam0(1, 2), x0(3);
    LowerTri prod = r_matrix(5, lam0, x0);
    // R_k Pbar_{k-1} = P_k.
    CHECK(r_matrix(5, lam0, x0)
              .mul(pbar(4, MultiPoly(lam0), MultiPoly(x0))) ==
          pascal(5, MultiPoly(lam0), MultiPoly(x0)));

    // G_4 G_3 G_2 G_1 = P_4 symbolically; G_2 is the paper Example's third factor.
    LowerTri acc = g_factor(4, 4, L, X);
    for (long k = 3; k >= 1; --k) acc = acc.mul(g_factor(4, k, L, X));
    CHECK(acc == pascal(4, L, X));
    CHECK(g_factor(4, 1, L, X) == LowerTri::identity(4));
    const LowerTri g2 = g_factor(4, 2, L, X);
    CHECK(g2.at(4, 3) == X);
    CHECK(g2.at(4, 1).is_zero());
    CHECK(q_factor(4, 4, L, X) == pascal(4, L, X));
}

TEST_CASE("bernoulli matrices") {
    CHECK(bernoulli_matrix(3, 0, L, X) == pascal(3, L, X));
    CHECK(l_matrix(3, 0, L, X) == pascal(3, One, X));
    const LowerTri b1 = bernoulli_matrix(4, 1, L, X);
    CHECK(b1.at(2, 1) == P("x + 1/2*lambda - 1/2"));
    CHECK(b1.at(4, 3) == Rational(3) * beta(1, 1, L, X));
    CHECK(bernoulli_matrix(3, 1, L, X).mul(bernoulli_matrix(3, 2, L, Y)) ==
          bernoulli_matrix(3, 3, L, X + Y));
    CHECK(bernoulli_matrix(3, 1, L, X).inv() == bernoulli_matrix(3, -1, L, -X));
}

TEST_CASE("first-type stirling matrices") {
    const StirlingParams p(U, L, X);
    const LowerTri big = stirling_matrix_first_type(4, p, 2);
    const LowerTri small = stirling_matrix_first_type(4, p, 1);
    CHECK(big.mul(small) == LowerTri::identity(4));
    for (long i = 1; i <= 4; ++i) {
        CHECK(big.at(i, i) == One);
        CHECK(small.at(i, i) == One);
    }
    // S_n[mu,0,0] has entries mu^{i-j} S_2(i,j).
    const LowerTri classical = stirling_matrix_first_type(5, StirlingParams(U, Zero, Zero), 2);
    for (long i = 1; i <= 5; ++i)
        for (long j = 1; j <= i; ++j)
            CHECK(classical.at(i, j) == U.pow(i - j) * stirling2(i, j));
}

TEST_CASE("second-type stirling matrices") {
    for (long h = -2; h <= 2; ++h) {
        const LowerTri big = stirling_matrix_second_type(4, h, L, X, 2);
        const LowerTri small = stirling_matrix_second_type(4, h, L, X, 1);
        for (long i = 1; i <= 4; ++i) CHECK(big.at(i, i) == One);
        CHECK(small.mul(big) == LowerTri::identity(4));
    }
    // Zero below the diagonal in columns j < h.
    const LowerTri shifted = stirling_matrix_second_type(4, 2, L, X, 2);
    CHECK(shifted.at(3, 1).is_zero());
    CHECK(shifted.at(2, 1).is_zero());
    // Theorem particular: P_n[lambda,x-y] = G_{n,0}[1,lambda,-x] g_{n,0}[1,lambda,-y].
    CHECK(stirling_matrix_second_type(4, 0, L, -X, 2)
              .mul(stirling_matrix_second_type(4, 0, L, -Y, 1)) == pascal(4, L, X - Y));
}

TEST_CASE("nilpotency of B - I") {
    for (long n = 1; n <= 4; ++n) {
        const LowerTri nilp = bernoulli_matrix(n, 1, L, X).sub(LowerTri::identity(n));
        CHECK(nilp.pow(n) == LowerTri(n));
        CHECK(nilp.pow(n + 1) == LowerTri(n));
    }
}

}
