#include <map>
#include <random>
#include <vector>

#include "degenmat/combinatorics.hpp"
#include "degenmat/egf.hpp"
#include "degenmat/errors.hpp"
#include "degenmat/multipoly.hpp"
#include "doctest.h"

using namespace degenmat;

namespace {

const MultiPoly L = sym_lambda();
const MultiPoly X = sym_x();
const MultiPoly Y = sym_y();
const MultiPoly One(Rational(1));

MultiPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    MultiPoly p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e{static_cast<unsigned>(expo(rng)), static_cast<unsigned>(expo(rng)),
                    static_cast<unsigned>(expo(rng)), static_cast<unsigned>(expo(rng))};
        p += MultiPoly::monomial(Rational(num(rng), den(rng)), e);
    }
    return p;
}

EgfSeries gff_series(long order, const MultiPoly& base, const MultiPoly& step) {
    EgfSeries s(order);
    for (long k = 0; k <= order; ++k) s[k] = gff(base, step, k);
    return s;
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("rational invariants and text form") {
    CHECK(Rational(4, 6).str() == "2/3");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(-19, 30).denominator() == 30);
    CHECK(Rational::parse("19/30") == Rational(19, 30));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("poly arithmetic spec cases") {
    CHECK(X * (X - L) == X.pow(2) - X * L);
    const MultiPoly p = X.pow(3) - Rational(1, 2) * L;
    CHECK(p + MultiPoly() == p);
    CHECK((X + Rational(1, 2) * L - MultiPoly(Rational(1, 2))) - X ==
          Rational(1, 2) * L - MultiPoly(Rational(1, 2)));
}

TEST_CASE("poly eval") {
    const MultiPoly beta2 = X.pow(2) - X - Rational(1, 6) * L.pow(2) + MultiPoly(Rational(1, 6));
    CHECK(beta2.eval({{Sym::lambda, Rational(0)}}) ==
          X.pow(2) - X + MultiPoly(Rational(1, 6)));
    CHECK(beta2.eval({}) == beta2);
    CHECK((X * L).eval({{Sym::x, Rational(3)}, {Sym::lambda, Rational(1, 3)}}) == One);
}

TEST_CASE("exact division by a symbol") {
    CHECK((L * X + L.pow(2)).div_exact(Sym::lambda) == X + L);
    CHECK(L.div_exact(Sym::lambda) == One);
    CHECK_THROWS_AS(X.div_exact(Sym::lambda), NotDivisible);
}

TEST_CASE("canonical text form and parsing") {
    const MultiPoly beta2 = X.pow(2) - X - Rational(1, 6) * L.pow(2) + MultiPoly(Rational(1, 6));
    CHECK(beta2.str() == "x^2 - x - 1/6*lambda^2 + 1/6");
    CHECK(MultiPoly::parse("x^2 - x - 1/6*lambda^2 + 1/6") == beta2);
    CHECK(MultiPoly().str() == "0");
    CHECK(MultiPoly::parse("0") == MultiPoly());
    CHECK(MultiPoly::parse("-x*y + 2") == Rational(2) - X * Y);
    CHECK_THROWS_AS(MultiPoly::parse("x +"), ParseError);
    CHECK_THROWS_AS(MultiPoly::parse("z + 1"), ParseError);
}

TEST_CASE("generalized falling factorial") {
    CHECK(gff(X, L, 3) == X.pow(3) - Rational(3) * X.pow(2) * L + Rational(2) * X * L.pow(2));
    CHECK(gff(X, L, 3).str() == "x^3 - 3*x^2*lambda + 2*x*lambda^2");
    CHECK(gff(X, L, 0) == One);
    CHECK(gff(MultiPoly(Rational(2)), MultiPoly(), 4) == MultiPoly(Rational(16)));
    for (long k = 0; k <= 8; ++k) CHECK(gff(X, MultiPoly(), k) == X.pow(k));
    CHECK(gff_skip_base(L, One, 3) == (L - One) * (L - Rational(2)));
}

TEST_CASE("rising factorial") {
    CHECK(rising(MultiPoly(Rational(2)), 3) == MultiPoly(Rational(24)));
    CHECK(rising(X, 2) == X.pow(2) + X);
    CHECK(rising(X - Y, 0) == One);
}

TEST_CASE("series multiplication is binomial convolution") {
    // (x|lambda)-series times (y|lambda)-series is the (x+y|lambda)-series.
    const long order = 8;
    CHECK(gff_series(order, X, L).mul(gff_series(order, Y, L)) == gff_series(order, X + Y, L));

    EgfSeries a = gff_series(4, X, L);
    CHECK(a.mul(EgfSeries::one(4)) == a);

    EgfSeries ones(2);
    for (long k = 0; k <= 2; ++k) ones[k] = One;
    const EgfSeries sq = ones.mul(ones);
    CHECK(sq[0] == One);
    CHECK(sq[1] == MultiPoly(Rational(2)));
    CHECK(sq[2] == MultiPoly(Rational(4)));

    CHECK_THROWS_AS(EgfSeries::one(3).mul(EgfSeries::one(4)), OrderMismatch);
}

TEST_CASE("series inverse") {
    CHECK(EgfSeries::one(5).inv() == EgfSeries::one(5));

    EgfSeries expt(2);  // e^t
    for (long k = 0; k <= 2; ++k) expt[k] = One;
    const EgfSeries inv = expt.inv();
    CHECK(inv[0] == One);
    CHECK(inv[1] == -One);
    CHECK(inv[2] == One);

    const EgfSeries a = gff_series(8, One, L);  // unit constant term
    CHECK(a.mul(a.inv()) == EgfSeries::one(8));

    EgfSeries bad(2);
    bad[0] = X;
    CHECK_THROWS_AS(bad.inv(), NonUnitConstant);
    CHECK_THROWS_AS(bad.pow(-1), NonUnitConstant);
}

TEST_CASE("series powers") {
    const EgfSeries a = gff_series(6, One, L);
    CHECK(a.pow(0) == EgfSeries::one(6));
    CHECK(a.pow(1) == a);
    // (sum (1|lambda)_m t^m/m!)^2 = sum (2|lambda)_m t^m/m!, checked against a
    // direct convolution as well.
    const EgfSeries sq = a.pow(2);
    CHECK(sq == gff_series(6, MultiPoly(Rational(2)), L));
    for (long m = 0; m <= 6; ++m) {
        MultiPoly conv;
        for (long k = 0; k <= m; ++k) conv += binom(m, k) * (gff(One, L, k) * gff(One, L, m - k));
        CHECK(sq[m] == conv);
    }
    CHECK(a.pow(-2).mul(a.pow(2)) == EgfSeries::one(6));
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const MultiPoly a = random_poly(rng);
        const MultiPoly b = random_poly(rng);
        const MultiPoly c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(MultiPoly::parse(a.str()) == a);
    }
}

}
