#include "catalog_util.hpp"

namespace degenmat::cat {

void register_stirling_second(std::vector<Identity>& out) {
    const MultiPoly L = sym_lambda();
    const MultiPoly U = sym_mu();
    const MultiPoly X = sym_x();
    const MultiPoly Y = sym_y();
    const MultiPoly One(Rational(1));
    const MultiPoly Zero;

    out.push_back(Identity{
        "gnh-inverse", "S4.2 \"It is obvious from (9)\"",
        "g_{n,h} = (G_{n,h})^{-1}; symbolic lambda, x; h from the grid",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                for (long h : g.values("h")) {
                    const LowerTri big = stirling_matrix_second_type(n, h, L, X, 2);
                    const LowerTri small = stirling_matrix_second_type(n, h, L, X, 1);
                    const LowerTri id = LowerTri::identity(n);
                    s.matrix(kv("n", n, "h", h, "side", "g*G"), small.mul(big), id);
                    s.matrix(kv("n", n, "h", h, "side", "G*g"), big.mul(small), id);
                }
            }
        }});

    out.push_back(Identity{
        "thm-bs", "S4.2 Theorem (th bs) \"By (1) and (stx)\"",
        "four displays entrywise on j >= h, plus the two Pascal particulars; symbolic",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                for (long h : g.values("h")) {
                    const long min_col = std::max(h, 1L);
                    const LowerTri big_h = stirling_matrix_second_type(n, h, L, -X, 2);
                    const LowerTri big_0 = stirling_matrix_second_type(n, 0, L, -Y, 2);
                    const LowerTri small_h = stirling_matrix_second_type(n, h, L, -X, 1);
                    const LowerTri small_0 = stirling_matrix_second_type(n, 0, L, -Y, 1);
                    s.matrix_cols_from(kv("n", n, "h", h, "display", "G=BG"), big_h,
                                       bernoulli_matrix(n, h, L, X - Y).mul(big_0), min_col);
                    s.matrix_cols_from(kv("n", n, "h", h, "display", "G=GL"), big_h,
                                       big_0.mul(l_matrix(n, -h, L, X - Y)), min_col);
                    s.matrix_cols_from(kv("n", n, "h", h, "display", "g=gB"), small_h,
                                       small_0.mul(bernoulli_matrix(n, -h, L, Y - X)), min_col);
                    s.matrix_cols_from(kv("n", n, "h", h, "display", "g=Lg"), small_h,
                                       l_matrix(n, h, L, Y - X).mul(small_0), min_col);
                }
                s.matrix(kv("n", n, "display", "P=Gg"), pascal(n, L, X - Y),
                         stirling_matrix_second_type(n, 0, L, -X, 2)
                             .mul(stirling_matrix_second_type(n, 0, L, -Y, 1)));
                s.matrix(kv("n", n, "display", "P1=gG"), pascal(n, One, Y - X),
                         stirling_matrix_second_type(n, 0, L, -X, 1)
                             .mul(stirling_matrix_second_type(n, 0, L, -Y, 2)));
            }
        }});

    out.push_back(Identity{
        "eq-5", "S4.2 Eq. (5) \"By (1) and (stx), we have\"",
        "scalar form of G = B G; i >= j >= max(0,h); symbolic lambda, x, y",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long i : g.values("i")) {
                    for (long j = std::max(0L, h); j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(i, k) *
                                   (beta(i - k, h, L, X - Y) * S2(k, j, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) / binom(i - h, j - h) * S2(i - h, j - h, One, L, -X),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-50", "S4.2 Eq. (50) \"It can be seen from (8) and generating functions\"",
        "S_2(i,j|1,1/lambda,x/lambda) = lambda^{j-i} S_1(i,j|1,lambda,-x); rational samples",
        [=](const Grid& g, CaseSink& s) {
            const std::vector<Rational> xs{Rational(0), Rational(1), Rational(-2)};
            for (const Rational& lam0 : g.samples()) {
                if (lam0.is_zero()) continue;
                const Rational inv = Rational(1) / lam0;
                for (const Rational& x0 : xs) {
                    for (long i : g.values("i")) {
                        for (long j = 0; j <= i; ++j) {
                            s.scalar(kv("lambda", lam0, "x", x0, "i", i, "j", j),
                                     S2(i, j, One, MultiPoly(inv), MultiPoly(x0 * inv)),
                                     inv.pow(i - j) *
                                         S1(i, j, One, MultiPoly(lam0), MultiPoly(-x0)));
                        }
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-5a", "S4.2 Eq. (5a) \"replace (lambda,x,y)\"",
        "scalar form of g = L g; i >= j >= max(0,h); symbolic lambda, x, y",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long i : g.values("i")) {
                    for (long j = std::max(0L, h); j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(i, k) *
                                   (alpha(i - k, h, L, Y - X) * S1(k, j, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) / binom(i - h, j - h) * S1(i - h, j - h, One, L, -X),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-6", "Corollary 4.3 Eq. (6) \"in terms of the Stirling numbers\"",
        "C(i,j) beta_{i-j}^{(h)}(lambda,x-y) as an S_2 S_1 sum; j >= max(0,h)",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long i : g.values("i")) {
                    for (long j = std::max(0L, h); j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(i, k) / binom(i - h, k - h) *
                                   (S2(i - h, k - h, One, L, -X) * S1(k, j, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) * beta(i - j, h, L, X - Y), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-6a", "Corollary 4.3 Eq. (6a) \"in terms of the Stirling numbers\"",
        "C(i,j) alpha_{i-j}^{(h)}(lambda,y-x) as an S_1 S_2 sum; j >= max(0,h)",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long i : g.values("i")) {
                    for (long j = std::max(0L, h); j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(i, k) / binom(i - h, k - h) *
                                   (S1(i - h, k - h, One, L, -X) * S2(k, j, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) * alpha(i - j, h, L, Y - X), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "cor-bst1-particulars", "Corollary 4.3 \"In particular\"",
        "beta_i and alpha_i expansions with falling-factorial weights; symbolic lambda, x",
        [=](const Grid& g, CaseSink& s) {
            for (long i : g.values("i")) {
                MultiPoly rhs1;
                MultiPoly rhs2;
                for (long k = 0; k <= i; ++k) {
                    rhs1 += Rational(1, k + 1) * (S2(i, k, One, L, -X) * gff(L - One, One, k));
                    rhs2 += Rational(1, k + 1) * (S1(i, k, One, L, X) * gff(One, L, k + 1));
                }
                s.scalar(kv("seq", "beta", "i", i), beta(i, 1, L, X), rhs1);
                s.scalar(kv("seq", "alpha", "i", i), alpha(i, 1, L, X), rhs2);
            }
        }});

    out.push_back(Identity{
        "eq-2", "S4.2 Eq. (2) \"we can equally well write\"",
        "two-shift form; j >= max(h, m, 0); h, m from the shift range",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long m : g.values("h")) {
                    for (long i : g.values("i")) {
                        for (long j = std::max({0L, h, m}); j <= i; ++j) {
                            MultiPoly rhs;
                            for (long k = j; k <= i; ++k)
                                rhs += binom(i - m, k - m) / binom(i - h, k - h) *
                                       (S2(i - h, k - h, One, L, -X) *
                                        S1(k - m, j - m, One, L, -Y));
                            s.scalar(kv("h", h, "m", m, "i", i, "j", j),
                                     binom(i - m, j - m) * beta(i - j, h - m, L, X - Y), rhs);
                        }
                    }
                }
            }
        }});

    out.push_back(Identity{
        "B-self-order", "S4.2 \"and in particular\"",
        "R_2/S_1 expansion of B^{(l)} and the self-order value B_i^{(i)}",
        [=](const Grid& g, CaseSink& s) {
            for (long l : filtered(g, "r", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += Rational(1) / binom(l + k, l) *
                                   (carlitz_r2(i, k, X) * stirling1(l + k, l + j));
                        s.scalar(kv("l", l, "i", i, "j", j),
                                 binom(i, j) / binom(j + l, j) *
                                     bernoulli_classic(i - j, l, X),
                                 rhs);
                    }
                }
            }
            for (long i : g.values("i")) {
                Rational rhs;
                for (long k = 0; k <= i; ++k)
                    rhs += Rational(1) / binom(i + k, i) * stirling2(i, k) * stirling1(i + k, i);
                s.scalar(kv("display", "B_i^{(i)}", "i", i),
                         bernoulli_classic(i, i, Zero).constant_value(), rhs);
            }
        }});

    out.push_back(Identity{
        "gen-orthogonality", "S4.2 \"the generalized orthogonality relations\"",
        "C(i,j)(x-y|lambda)_{i-j} and C(i,j)(y-x|mu)_{i-j}; fully symbolic",
        [=](const Grid& g, CaseSink& s) {
            for (long i : g.values("i")) {
                for (long j = 0; j <= i; ++j) {
                    MultiPoly rhs1;
                    MultiPoly rhs2;
                    for (long k = j; k <= i; ++k) {
                        rhs1 += S2(i, k, U, L, -X) * S1(k, j, U, L, -Y);
                        rhs2 += S1(i, k, U, L, -X) * S2(k, j, U, L, -Y);
                    }
                    s.scalar(kv("display", 1, "i", i, "j", j),
                             binom(i, j) * gff(X - Y, L, i - j), rhs1);
                    s.scalar(kv("display", 2, "i", i, "j", j),
                             binom(i, j) * gff(Y - X, U, i - j), rhs2);
                }
            }
        }});

    out.push_back(Identity{
        "eq-7a", "Corollary 4.5 Eq. (7a) \"also entails following\"",
        "S_2 shift with alpha^{(-h)} weights; j >= max(0,h)",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long i : g.values("i")) {
                    for (long j = std::max(0L, h); j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k, j) *
                                   (S2(i, k, One, L, -Y) * alpha(k - j, -h, L, X - Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) / binom(i - h, j - h) * S2(i - h, j - h, One, L, -X),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-7", "Corollary 4.5 Eq. (7) \"also entails following\"",
        "S_1 shift with beta^{(-h)} weights; j >= max(0,h)",
        [=](const Grid& g, CaseSink& s) {
            for (long h : g.values("h")) {
                for (long i : g.values("i")) {
                    for (long j = std::max(0L, h); j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k, j) *
                                   (S1(i, k, One, L, -Y) * beta(k - j, -h, L, Y - X));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) / binom(i - h, j - h) * S1(i - h, j - h, One, L, -X),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "cor-bst2-particulars", "Corollary 4.5 \"In particular\"",
        "the two displays with Carlitz degenerate Stirling numbers; symbolic lambda, x",
        [=](const Grid& g, CaseSink& s) {
            for (long i : g.values("i")) {
                for (long j = 0; j <= i; ++j) {
                    MultiPoly rhs1;
                    MultiPoly rhs2;
                    for (long k = j; k <= i; ++k) {
                        rhs1 += binom(k, j) * (degen_stirling2(i, k, L) * alpha(k - j, 1, L, X));
                        rhs2 += binom(k, j) * alt_sign(i - k) *
                                (degen_stirling1(i, k, L) * beta(k - j, 1, L, X));
                    }
                    const Rational w = Rational(j + 1) / Rational(i + 1);
                    s.scalar(kv("display", 1, "i", i, "j", j),
                             w * S2(i + 1, j + 1, One, L, -X), rhs1);
                    s.scalar(kv("display", 2, "i", i, "j", j),
                             w * S1(i + 1, j + 1, One, L, X), rhs2);
                }
            }
        }});

    out.push_back(Identity{
        "cor-G-factorization", "S4.2 Corollary \"In consequence of Theorem\"",
        "G_{n,0}[1,lambda,-x] factored through G_k[lambda,x] and G_k[1,x]; symbolic",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                const LowerTri lhs = stirling_matrix_second_type(n, 0, L, -X, 2);
                const LowerTri base = stirling_matrix_second_type(n, 0, L, Zero, 2);
                s.matrix(kv("n", n, "form", "left"), lhs, g_product(n, L, X).mul(base));
                s.matrix(kv("n", n, "form", "right"), lhs, base.mul(g_product(n, One, X)));
            }
        }});

    out.push_back(Identity{
        "eq-14", "S4.2 Eq. (14) \"It is evident from definitions\"",
        "beta_m^{(-h)}(lambda,x) = C(m+h,h)^{-1} S_2(m+h,h|1,lambda,-x); h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long m : g.values("m")) {
                    s.scalar(kv("h", h, "m", m), beta(m, -h, L, X),
                             Rational(1) / binom(m + h, h) * S2(m + h, h, One, L, -X));
                }
            }
        }});

    out.push_back(Identity{
        "eq-14a", "S4.2 Eq. (14a) \"It is evident from definitions\"",
        "alpha_m^{(-h)}(lambda,x) = C(m+h,h)^{-1} S_1(m+h,h|1,lambda,x); h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long m : g.values("m")) {
                    s.scalar(kv("h", h, "m", m), alpha(m, -h, L, X),
                             Rational(1) / binom(m + h, h) * S1(m + h, h, One, L, X));
                }
            }
        }});

    out.push_back(Identity{
        "eq-s2s", "S4.2 Eq. (s2s) \"according as h is negative or positive\"",
        "S_2 addition theorem, m = i + h; h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    const long m = i + h;
                    for (long j = 0; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= m - h; ++k)
                            rhs += binom(m, k) *
                                   (S2(m - k, h, One, L, -X) * S2(k, j, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(h + j, j) * S2(m, j + h, One, L, -(X + Y)), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-s1s", "S4.2 Eq. (s1s) \"according as h is negative or positive\"",
        "S_1 addition theorem, m = i + h; h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    const long m = i + h;
                    for (long j = 0; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= m - h; ++k)
                            rhs += binom(m, k) *
                                   (S1(m - k, h, One, L, -X) * S1(k, j, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(h + j, j) * S1(m, j + h, One, L, -(X + Y)), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-7a1", "S4.2 Eq. (7a1) \"according as h is negative or positive\"",
        "S_2 with alpha^{(h)} weights, positive shift; h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k, j) *
                                   (alpha(k - j, h, L, X) * S2(i, k, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) / binom(i + h, j + h) *
                                     S2(i + h, j + h, One, L, -(X + Y)),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-71", "S4.2 Eq. (71) \"according as h is negative or positive\"",
        "S_1 with beta^{(h)} weights, positive shift; h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k, j) * (beta(k - j, h, L, X) * S1(i, k, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) / binom(i + h, j + h) *
                                     S1(i + h, j + h, One, L, -(Y - X)),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-51", "S4.2 Eq. (51) \"according as h is negative or positive\"",
        "S_2 deconvolution, i >= j >= h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = h; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(i, k) * (beta(i - k, h, L, X) * S2(k, j, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) / binom(i - h, j - h) *
                                     S2(i - h, j - h, One, L, -(X + Y)),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-5a1", "S4.2 Eq. (5a1) \"according as h is negative or positive\"",
        "S_1 deconvolution, i >= j >= h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = h; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(i, k) * (alpha(i - k, h, L, X) * S1(k, j, One, L, -Y));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, j) / binom(i - h, j - h) *
                                     S1(i - h, j - h, One, L, -(Y - X)),
                                 rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-7a2", "S4.2 Eq. (7a2) \"according as h is negative or positive\"",
        "C(i,h)-weighted S_2/S_1 product form, i >= j >= h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = h; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k, j - h) *
                                   (S2(i, k, One, L, -Y) * S1(k - j + h, h, One, L, -X));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, h) * S2(i - h, j - h, One, L, -(Y - X)), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-72", "S4.2 Eq. (72) \"according as h is negative or positive\"",
        "C(i,h)-weighted S_1/S_2 product form, i >= j >= h >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 0; })) {
                for (long i : g.values("i")) {
                    for (long j = h; j <= i; ++j) {
                        MultiPoly rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k, j - h) *
                                   (S1(i, k, One, L, -Y) * S2(k - j + h, h, One, L, -X));
                        s.scalar(kv("h", h, "i", i, "j", j),
                                 binom(i, h) * S1(i - h, j - h, One, L, -(Y - X)), rhs);
                    }
                }
            }
        }});
}

}  // namespace degenmat::cat
