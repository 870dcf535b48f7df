#include "catalog_util.hpp"

namespace degenmat::cat {

void register_lah(std::vector<Identity>& out) {
    const MultiPoly L = sym_lambda();
    const MultiPoly X = sym_x();
    const MultiPoly Y = sym_y();
    const MultiPoly One(Rational(1));
    const MultiPoly Zero;

    out.push_back(Identity{
        "sec5.4-lah-reduction", "S5.4 \"For lambda = 1 and x = 0 in (11) and (11a)\"",
        "S(m,k) at (1,-1,0) and (-1,1,0) against the Lah closed form",
        [=](const Grid& g, CaseSink& s) {
            for (long m : g.values("m")) {
                for (long k = 0; k <= m; ++k) {
                    const Rational lahval = lah(m, k);
                    s.scalar(kv("view", "S1(1,-1,0)", "m", m, "k", k),
                             S1(m, k, One, -One, Zero).constant_value(),
                             alt_sign(m - k) * lahval);
                    s.scalar(kv("view", "S2(1,-1,0)", "m", m, "k", k),
                             S2(m, k, One, -One, Zero).constant_value(), lahval);
                    s.scalar(kv("view", "S1(-1,1,0)", "m", m, "k", k),
                             S1(m, k, -One, One, Zero).constant_value(), lahval);
                    s.scalar(kv("view", "S2(-1,1,0)", "m", m, "k", k),
                             S2(m, k, -One, One, Zero).constant_value(),
                             alt_sign(m - k) * lahval);
                }
            }
        }});

    out.push_back(Identity{
        "sec5.4-binom-1", "S5.4 \"it follows from (6a), (7a1) and (7a2)\"",
        "C(i-j+m-1,i-j) = sum (-1)^{k-j} C(i+m-1,k+m-1) C(k-1,j-1); m >= 1, j >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long m : filtered(g, "h", [](long v) { return v >= 1; })) {
                for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                    for (long j = 1; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += alt_sign(k - j) * binom(i + m - 1, k + m - 1) *
                                   binom(k - 1, j - 1);
                        s.scalar(kv("m", m, "i", i, "j", j), binom(i - j + m - 1, i - j), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.4-binom-2", "S5.4 \"for x = y = 0, h >= 0\"",
        "C(i+h,j+h) = sum C(i,k) C(h,k-j)",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k) rhs += binom(i, k) * binom(h, k - j);
                        s.scalar(kv("h", h, "i", i, "j", j), binom(i + h, j + h), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.4-binom-3", "S5.4 \"for x = 0, y = 1 - lambda, j >= h >= 1\"",
        "C(i-h+1,j-h+1) = sum (-1)^{k-j} C(i+1,k+1) C(k-j+h-1,h-1)",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 1; })) {
                for (long i : g.values("i")) {
                    for (long j = h; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += alt_sign(k - j) * binom(i + 1, k + 1) *
                                   binom(k - j + h - 1, h - 1);
                        s.scalar(kv("h", h, "i", i, "j", j), binom(i - h + 1, j - h + 1), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.4-closed-s", "S5.4 \"In general, for arbitrary x and y\"",
        "S_2(m,j|1,-1,-x) = (-1)^{m-j} S_1(m,j|1,-1,-x) = C(m,j) <x+j>_{m-j}; symbolic x",
        [=](const Grid& g, CaseSink& s) {
            for (long m : g.values("m")) {
                for (long j = 0; j <= m; ++j) {
                    const MultiPoly s2 = S2(m, j, One, -One, -X);
                    s.scalar(kv("m", m, "j", j, "form", "S1"), s2,
                             alt_sign(m - j) * S1(m, j, One, -One, -X));
                    s.scalar(kv("m", m, "j", j, "form", "rising"), s2,
                             binom(m, j) * rising(X + Rational(j), m - j));
                }
            }
        }});

    out.push_back(Identity{
        "sec5.4-closed-beta", "S5.4 \"In general, for arbitrary x and y\"",
        "beta_m^{(h)}(-1,x) = (-1)^m alpha_m^{(h)}(-1,-x) = <x-h>_m; symbolic x",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long m : g.values("m")) {
                    const MultiPoly b = beta(m, h, -One, X);
                    s.scalar(kv("h", h, "m", m, "form", "alpha"), b,
                             alt_sign(m) * alpha(m, h, -One, -X));
                    s.scalar(kv("h", h, "m", m, "form", "rising"), b,
                             rising(X - Rational(h), m));
                }
            }
        }});

    out.push_back(Identity{
        "sec5.4-rising-1", "S5.4 \"Then (6a), (51) and (7a2) reduce to\"",
        "<x-h-y>_{i-j} alternating convolution; symbolic x, y",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long j = 0; j <= 2; ++j) {
                    for (long d : g.values("m")) {
                        MultiPoly rhs;
                        for (long k = 0; k <= d; ++k)
                            rhs += binom(d, k) * alt_sign(k) *
                                   (rising(Y + Rational(j), k) *
                                    rising(X - Rational(h) + Rational(j + k), d - k));
                        s.scalar(kv("h", h, "j", j, "d", d),
                                 rising(X - Rational(h) - Y, d), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.4-rising-2", "S5.4 \"Then (6a), (51) and (7a2) reduce to\"",
        "<y+j+x-h>_{i-j} Vandermonde convolution; symbolic x, y",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long j = 0; j <= 2; ++j) {
                    for (long d : g.values("m")) {
                        MultiPoly rhs;
                        for (long k = 0; k <= d; ++k)
                            rhs += binom(d, k) * (rising(Y + Rational(j), k) *
                                                  rising(X - Rational(h), d - k));
                        s.scalar(kv("h", h, "j", j, "d", d),
                                 rising(Y + Rational(j) + X - Rational(h), d), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.4-rising-3", "S5.4 \"Then (6a), (51) and (7a2) reduce to\"",
        "<y+j-x-h>_{i-j} alternating convolution; symbolic x, y",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long j = 0; j <= 2; ++j) {
                    for (long d : g.values("m")) {
                        MultiPoly rhs;
                        for (long k = 0; k <= d; ++k)
                            rhs += binom(d, k) * alt_sign(k) *
                                   (rising(X + Rational(h), k) *
                                    rising(Y + Rational(j + k), d - k));
                        s.scalar(kv("h", h, "j", j, "d", d),
                                 rising(Y + Rational(j) - X - Rational(h), d), rhs);
                    }
                }
            }
        }});
}

}  // namespace degenmat::cat
