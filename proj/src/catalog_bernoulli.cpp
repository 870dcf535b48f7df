#include "catalog_util.hpp"

namespace degenmat::cat {

void register_bernoulli(std::vector<Identity>& out) {
    const MultiPoly L = sym_lambda();
    const MultiPoly X = sym_x();
    const MultiPoly Y = sym_y();
    const MultiPoly One(Rational(1));
    const MultiPoly Zero;

    out.push_back(Identity{
        "eq-0", "S3.1 Eq. (0) \"beta_k^{(w)}(lambda,x) beta_{m-k}^{(z)}(lambda,y)\"",
        "convolution of orders; symbolic lambda, x, y; m, w, z from the grid",
        [=](const Grid& g, CaseSink& s) {
            for (long m : g.values("m")) {
                for (long w : g.values("w")) {
                    for (long z : g.values("z")) {
                        MultiPoly rhs;
                        for (long k = 0; k <= m; ++k)
                            rhs += binom(m, k) * (beta(k, w, L, X) * beta(m - k, z, L, Y));
                        s.scalar(kv("m", m, "w", w, "z", z), beta(m, w + z, L, X + Y), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "beta-addition", "S3.1 \"beta_m(lambda,x+y) = sum C(m,k) beta_k(lambda,x) (y|lambda)_{m-k}\"",
        "addition formula; symbolic lambda, x, y; m from the grid",
        [=](const Grid& g, CaseSink& s) {
            for (long m : g.values("m")) {
                MultiPoly rhs;
                for (long k = 0; k <= m; ++k)
                    rhs += binom(m, k) * (beta(k, 1, L, X) * gff(Y, L, m - k));
                s.scalar(kv("m", m), beta(m, 1, L, X + Y), rhs);
            }
        }});

    out.push_back(Identity{
        "thm-B-product",
        "S3.1 Theorem \"B_n^{(w+z)}[lambda,x+y] = B_n^{(w)}[lambda,x] B_n^{(z)}[lambda,y]\"",
        "both orderings; symbolic lambda, x, y; n, w, z from the grid",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                for (long w : g.values("w")) {
                    for (long z : g.values("z")) {
                        const LowerTri lhs = bernoulli_matrix(n, w + z, L, X + Y);
                        s.matrix(kv("n", n, "w", w, "z", z, "order", "wz"), lhs,
                                 bernoulli_matrix(n, w, L, X).mul(bernoulli_matrix(n, z, L, Y)));
                        s.matrix(kv("n", n, "w", w, "z", z, "order", "zw"), lhs,
                                 bernoulli_matrix(n, z, L, X).mul(bernoulli_matrix(n, w, L, Y)));
                    }
                }
            }
        }});

    out.push_back(Identity{
        "cor-bk", "S3.1 Corollary (cor bk) \"(B_n^{(w)}[lambda,x])^k = B_n^{(kw)}[lambda,kx]\"",
        "matrix powers k = 0..3; symbolic lambda, x",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                for (long w : g.values("w")) {
                    for (long k = 0; k <= 3; ++k) {
                        s.matrix(kv("n", n, "w", w, "k", k),
                                 bernoulli_matrix(n, w, L, X).pow(k),
                                 bernoulli_matrix(n, k * w, L, Rational(k) * X));
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-bp", "S3.1 Eq. (bp) \"B_n^{(w)}[lambda,x+y] = P_n[lambda,x] B_n^{(w)}[lambda,y]\"",
        "both orderings; symbolic lambda, x, y",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                for (long w : g.values("w")) {
                    const LowerTri lhs = bernoulli_matrix(n, w, L, X + Y);
                    s.matrix(kv("n", n, "w", w, "order", "PB"), lhs,
                             pascal(n, L, X).mul(bernoulli_matrix(n, w, L, Y)));
                    s.matrix(kv("n", n, "w", w, "order", "BP"), lhs,
                             bernoulli_matrix(n, w, L, Y).mul(pascal(n, L, X)));
                }
            }
        }});

    out.push_back(Identity{
        "B-inverse", "S3.1 \"(B_n^{(w)}[lambda,x])^{-1} = B_n^{(-w)}[lambda,-x]\"",
        "also = P_n[lambda,-x] B_n^{(-w)}[lambda]; symbolic lambda, x",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                for (long w : g.values("w")) {
                    const LowerTri lhs = bernoulli_matrix(n, w, L, X).inv();
                    s.matrix(kv("n", n, "w", w, "form", "B"), lhs,
                             bernoulli_matrix(n, -w, L, -X));
                    s.matrix(kv("n", n, "w", w, "form", "PB"), lhs,
                             pascal(n, L, -X).mul(bernoulli_matrix(n, -w, L, Zero)));
                }
            }
        }});

    out.push_back(Identity{
        "B-factorization", "S3.1 Corollary \"The following is a consequence\"",
        "B_n[lambda,x] = G_n ... G_1 B_n[lambda]; symbolic lambda, x",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                s.matrix(kv("n", n), bernoulli_matrix(n, 1, L, X),
                         g_product(n, L, X).mul(bernoulli_matrix(n, 1, L, Zero)));
            }
        }});

    out.push_back(Identity{
        "B-nilpotent", "S3.1 \"is a lower-triangular matrix\"",
        "(B_n[lambda,x] - I_n)^h = 0 for n <= h; symbolic lambda, x",
        [=](const Grid& g, CaseSink& s) {
            const long hmax = std::max(g.hi("h"), static_cast<long>(6));
            for (long n : g.values("n")) {
                const LowerTri nilp = bernoulli_matrix(n, 1, L, X).sub(LowerTri::identity(n));
                for (long h = n; h <= hmax; ++h)
                    s.matrix(kv("n", n, "h", h), nilp.pow(h), LowerTri(n));
            }
        }});

    out.push_back(Identity{
        "h-sum-beta", "S3.1 \"for 0 <= m < h\"",
        "sum_{k<h} C(h,k)(-1)^{h-1-k} beta_m^{(k)}(lambda,kx/h) = beta_m^{(h)}(lambda,x); 0 <= m < h",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 1; })) {
                for (long m : filtered(g, "m", [&](long v) { return v >= 0 && v < h; })) {
                    MultiPoly lhs;
                    for (long k = 0; k < h; ++k)
                        lhs += binom(h, k) * alt_sign(h - 1 - k) *
                               beta(m, k, L, Rational(k, h) * X);
                    s.scalar(kv("h", h, "m", m), lhs, beta(m, h, L, X));
                }
            }
        }});

    out.push_back(Identity{
        "h-sum-shift", "S3.1 \"By the known identity\"",
        "sum_{k<h} C(h,k)(-1)^{h-k} beta_m^{(k)}(lambda,k/h) + beta_m^{(h)}(lambda) = "
        "-m beta_{m-1}^{(h-1)}(lambda); 1 <= m < h",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 2; })) {
                for (long m : filtered(g, "m", [&](long v) { return v >= 1 && v < h; })) {
                    // The known identity the display rests on.
                    s.scalar(kv("h", h, "m", m, "part", "shift"), beta(m, h, L, One),
                             Rational(m) * beta(m - 1, h - 1, L, Zero) + beta(m, h, L, Zero));
                    // The display, with the k = h term at argument 0.
                    MultiPoly lhs = beta(m, h, L, Zero);
                    for (long k = 0; k < h; ++k)
                        lhs += binom(h, k) * alt_sign(h - k) *
                               beta(m, k, L, MultiPoly(Rational(k, h)));
                    s.scalar(kv("h", h, "m", m, "part", "sum"), lhs,
                             Rational(-m) * beta(m - 1, h - 1, L, Zero));
                }
            }
        }});

    out.push_back(Identity{
        "h-sum-gff", "S3.1 \"by the fact that\"",
        "sum_{k<h} C(h,k)(-1)^{h-1-k} (kx|lambda)_m = (hx|lambda)_m; 0 <= m < h",
        [=](const Grid& g, CaseSink& s) {
            for (long h : filtered(g, "h", [](long v) { return v >= 1; })) {
                for (long m : filtered(g, "m", [&](long v) { return v >= 0 && v < h; })) {
                    MultiPoly lhs;
                    for (long k = 0; k < h; ++k)
                        lhs += binom(h, k) * alt_sign(h - 1 - k) * gff(Rational(k) * X, L, m);
                    s.scalar(kv("h", h, "m", m), lhs, gff(Rational(h) * X, L, m));
                }
            }
        }});

    out.push_back(Identity{
        "eq-1b2", "S3.2 Eq. (1b2) \"It is clear from (1)\"",
        "lambda0^m beta_m^{(w)}(1/lambda0, x0/lambda0) = alpha_m^{(w)}(lambda0, x0); rational samples",
        [=](const Grid& g, CaseSink& s) {
            const std::vector<Rational> xs{Rational(0), Rational(1), Rational(-2)};
            for (const Rational& lam0 : g.samples()) {
                if (lam0.is_zero()) continue;
                const Rational inv = Rational(1) / lam0;
                for (const Rational& x0 : xs) {
                    for (long m : g.values("m")) {
                        for (long w : g.values("w")) {
                            const MultiPoly lhs =
                                lam0.pow(m) * beta(m, w, MultiPoly(inv), MultiPoly(x0 * inv));
                            s.scalar(kv("lambda", lam0, "x", x0, "m", m, "w", w), lhs,
                                     alpha(m, w, MultiPoly(lam0), MultiPoly(x0)));
                        }
                    }
                }
            }
        }});
}

}  // namespace degenmat::cat
