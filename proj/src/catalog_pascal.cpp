#include "catalog_util.hpp"

namespace degenmat::cat {

namespace {

// Rational bindings (lam0, x0) for which every denominator (x-lam|lam)_{u},
// u < n-1, of R_n is nonzero.
std::vector<std::pair<Rational, Rational>> r_bindings(const Grid& g, long n) {
    std::vector<std::pair<Rational, Rational>> out;
    for (const Rational& lam0 : g.samples()) {
        for (const Rational& x0 : g.samples()) {
            bool ok = !x0.is_zero();
            for (long u = 1; ok && u <= n - 2; ++u)
                if ((x0 - Rational(u) * lam0).is_zero()) ok = false;
            if (ok) out.emplace_back(lam0, x0);
        }
    }
    return out;
}

}  // namespace

void register_pascal(std::vector<Identity>& out) {
    const MultiPoly L = sym_lambda();
    const MultiPoly X = sym_x();
    const MultiPoly Y = sym_y();

    out.push_back(Identity{
        "thm-2.1", "S2 Theorem 2.1 \"We apply induction on i\"",
        "R_n T_n = I_n and T_n^{-1} = R_n; n >= 2, rational (lambda, x) with nonzero denominators",
        [=](const Grid& g, CaseSink& s) {
            for (long n : filtered(g, "n", [](long v) { return v >= 2; })) {
                for (const auto& [lam0, x0] : r_bindings(g, n)) {
                    const LowerTri r = r_matrix(n, lam0, x0);
                    const LowerTri t = t_matrix(n, MultiPoly(lam0), MultiPoly(x0));
                    s.matrix(kv("n", n, "lambda", lam0, "x", x0, "side", "R*T"), r.mul(t),
                             LowerTri::identity(n));
                    s.matrix(kv("n", n, "lambda", lam0, "x", x0, "side", "inv(T)"), t.inv(), r);
                }
            }
        }});

    out.push_back(Identity{
        "lem-rp", "S2 Lemma (lem rp) \"This completes the proof\"",
        "R_k Pbar_{k-1} = P_k; k >= 1, rational bindings with nonzero denominators",
        [=](const Grid& g, CaseSink& s) {
            for (long k : filtered(g, "n", [](long v) { return v >= 1; })) {
                for (const auto& [lam0, x0] : r_bindings(g, k)) {
                    const MultiPoly lam(lam0), xx(x0);
                    const LowerTri lhs = r_matrix(k, lam0, x0).mul(pbar(k - 1, lam, xx));
                    s.matrix(kv("k", k, "lambda", lam0, "x", x0), lhs, pascal(k, lam, xx));
                }
            }
        }});

    out.push_back(Identity{
        "thm-pg", "S2 Theorem (teo pg) \"which generalizes the result of Zhang\"",
        "P_n = G_n G_{n-1} ... G_1, symbolic lambda, x (G built by T-inversion)",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n"))
                s.matrix(kv("n", n), g_product(n, L, X), pascal(n, L, X));
        }});

    out.push_back(Identity{
        "example-p4", "S2 Example \"= P_4[lambda,x]\"",
        "the displayed 4x4 factorization, entry for entry",
        [=](const Grid&, CaseSink& s) {
            const LowerTri p4 = matrix_from_rows({
                {"1"},
                {"x", "1"},
                {"x^2 - x*lambda", "2*x", "1"},
                {"x^3 - 3*x^2*lambda + 2*x*lambda^2", "3*x^2 - 3*x*lambda", "3*x", "1"},
            });
            const LowerTri g4 = matrix_from_rows({
                {"1"},
                {"x", "1"},
                {"x^2 - x*lambda", "x", "1"},
                {"x^3 - 3*x^2*lambda + 2*x*lambda^2", "x^2 - 2*x*lambda", "x", "1"},
            });
            const LowerTri g3 = matrix_from_rows({
                {"1"},
                {"0", "1"},
                {"0", "x", "1"},
                {"0", "x^2 - x*lambda", "x", "1"},
            });
            const LowerTri g2 = matrix_from_rows({
                {"1"},
                {"0", "1"},
                {"0", "0", "1"},
                {"0", "0", "x", "1"},
            });
            s.matrix("factor G_4", g_factor(4, 4, L, X), g4);
            s.matrix("factor G_3", g_factor(4, 3, L, X), g3);
            s.matrix("factor G_2", g_factor(4, 2, L, X), g2);
            s.matrix("factor G_1", g_factor(4, 1, L, X), LowerTri::identity(4));
            s.matrix("product G_4 G_3 G_2 G_1", g_product(4, L, X), p4);
            s.matrix("P_4[lambda,x]", pascal(4, L, X), p4);
        }});

    out.push_back(Identity{
        "pascal-addition", "S2 \"P_n[lambda,x+y] = P_n[lambda,x] P_n[lambda,y]\"",
        "symbolic lambda, x, y; n in the grid range",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n"))
                s.matrix(kv("n", n), pascal(n, L, X + Y), pascal(n, L, X).mul(pascal(n, L, Y)));
        }});

    out.push_back(Identity{
        "pascal-inverse", "S2 \"P_n^{-1}[lambda,x] = P_n[lambda,-x]\"",
        "symbolic lambda, x; n in the grid range",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n"))
                s.matrix(kv("n", n), pascal(n, L, X).inv(), pascal(n, L, -X));
        }});
}

}  // namespace degenmat::cat
