#include "catalog_util.hpp"

namespace degenmat::cat {

void register_carlitz(std::vector<Identity>& out) {
    const MultiPoly X = sym_x();
    const MultiPoly One(Rational(1));
    const MultiPoly Zero;
    const char* kAnchor = "S5.1 \"Carlitz's weighted Stirling numbers and Bernoulli\"";

    out.push_back(Identity{
        "sec5.1-1", kAnchor,
        "C(i,j) B_{i-j}(x) = sum (i/k) R_2(i-1,k-1,x) S_1(k,j); i >= j >= 1; symbolic x",
        [=](const Grid& g, CaseSink& s) {
            for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                for (long j = 1; j <= i; ++j) {
                    MultiPoly rhs;
                    for (long k = j; k <= i; ++k)
                        rhs += Rational(i, k) * (carlitz_r2(i - 1, k - 1, X) * stirling1(k, j));
                    s.scalar(kv("i", i, "j", j),
                             binom(i, j) * bernoulli_classic(i - j, 1, X), rhs);
                }
            }
        }});

    out.push_back(Identity{
        "sec5.1-2", kAnchor,
        "B_i(x) = sum (-1)^k k!/(k+1) R_2(i,k,x); symbolic x",
        [=](const Grid& g, CaseSink& s) {
            for (long i : g.values("i")) {
                MultiPoly rhs;
                for (long k = 0; k <= i; ++k)
                    rhs += alt_sign(k) * factorial(k) / Rational(k + 1) * carlitz_r2(i, k, X);
                s.scalar(kv("i", i), bernoulli_classic(i, 1, X), rhs);
            }
        }});

    out.push_back(Identity{
        "sec5.1-3", kAnchor,
        "i! b_i(-x) = sum ((-1)^{i-k}/(k+1)) R_1(i,k,x); symbolic x",
        [=](const Grid& g, CaseSink& s) {
            for (long i : g.values("i")) {
                MultiPoly rhs;
                for (long k = 0; k <= i; ++k)
                    rhs += alt_sign(i - k) / Rational(k + 1) * carlitz_r1(i, k, X);
                s.scalar(kv("i", i), factorial(i) * bernoulli_second(i, 1, -X), rhs);
            }
        }});

    out.push_back(Identity{
        "sec5.1-4", kAnchor,
        "(-1)^{i-1}(i-1)! = sum (k+1) S_1(i+1,k+1); i >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                Rational rhs;
                for (long k = 0; k <= i; ++k) rhs += Rational(k + 1) * stirling1(i + 1, k + 1);
                s.scalar(kv("i", i), alt_sign(i - 1) * factorial(i - 1), rhs);
            }
        }});

    out.push_back(Identity{
        "sec5.1-5", kAnchor,
        "i!/(i+h)! R_2(i+h,j+h,x) = (1/(j+h)!) sum S_2(i,k) b_{k-j}^{(h)}(x) k!; h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += stirling2(i, k) * factorial(k) *
                                   bernoulli_second(k - j, h, X);
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 factorial(i) / factorial(i + h) * carlitz_r2(i + h, j + h, X),
                                 Rational(1) / factorial(j + h) * rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.1-6", kAnchor,
        "((x+1)^{i+1} - x^{i+1})/(i+1) = sum S_2(i,k) b_k(x) k!; symbolic x",
        [=](const Grid& g, CaseSink& s) {
            for (long i : g.values("i")) {
                MultiPoly rhs;
                for (long k = 0; k <= i; ++k)
                    rhs += stirling2(i, k) * factorial(k) * bernoulli_second(k, 1, X);
                const MultiPoly lhs =
                    Rational(1, i + 1) * ((X + One).pow(i + 1) - X.pow(i + 1));
                s.scalar(kv("i", i), lhs, rhs);
            }
        }});

    out.push_back(Identity{
        "sec5.1-7", kAnchor,
        "(-1)^{i-j} C(i,j)/C(i+h,j+h) R_1(i+h,j+h,-x) = sum C(k,j) S_1(i,k) B_{k-j}^{(h)}(x); h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k, j) * stirling1(i, k) *
                                   bernoulli_classic(k - j, h, X);
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 alt_sign(i - j) * binom(i, j) / binom(i + h, j + h) *
                                     carlitz_r1(i + h, j + h, -X),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.1-8", kAnchor,
        "C(i,j)/C(i+h,j+h) S_1(i+h+1,j+h+1) = sum C(k,j) S_1(i+1,k+1) B_{k-j}^{(h)}; h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k, j) * stirling1(i + 1, k + 1) *
                                   bernoulli_classic(k - j, h, Zero).constant_value();
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) / binom(i + h, j + h) *
                                     stirling1(i + h + 1, j + h + 1),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-17", "S5.1 Eq. (17) \"which can be held from (5a1)\"",
        "S_1(m,1|1,0,1) = S_1(m,1) + m S_1(m-1,1) = (-1)^m (m-2)! for m > 1; m >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long m : filtered(g, "m", [](long v) { return v >= 1; })) {
                const Rational lhs = S1(m, 1, One, Zero, One).constant_value();
                s.scalar(kv("m", m, "form", "recurrence"), lhs,
                         stirling1(m, 1) + Rational(m) * stirling1(m - 1, 1));
                const Rational closed =
                    (m == 1) ? Rational(1) : alt_sign(m) * factorial(m - 2);
                s.scalar(kv("m", m, "form", "closed"), lhs, closed);
            }
        }});
}

}  // namespace degenmat::cat
