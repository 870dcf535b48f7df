#include "catalog_util.hpp"

namespace degenmat::cat {

void register_stirling_first(std::vector<Identity>& out) {
    const MultiPoly L = sym_lambda();
    const MultiPoly U = sym_mu();
    const MultiPoly X = sym_x();
    const MultiPoly One(Rational(1));
    const MultiPoly Zero;

    out.push_back(Identity{
        "eq-8", "S4 Eq. (8) \"S_1(m,k|mu,lambda,x) = mu^{m-k} S_1(m,k|1,lambda/mu,x/mu)\"",
        "both kinds at nonzero rational mu, symbolic lambda, x",
        [=](const Grid& g, CaseSink& s) {
            for (const Rational& mu0 : g.samples()) {
                if (mu0.is_zero()) continue;
                const Rational inv = Rational(1) / mu0;
                for (long m : g.values("m")) {
                    for (long k = 0; k <= m; ++k) {
                        s.scalar(kv("kind", 1, "mu", mu0, "m", m, "k", k),
                                 S1(m, k, MultiPoly(mu0), L, X),
                                 mu0.pow(m - k) * S1(m, k, One, inv * L, inv * X));
                        s.scalar(kv("kind", 2, "mu", mu0, "m", m, "k", k),
                                 S2(m, k, MultiPoly(mu0), L, X),
                                 mu0.pow(m - k) * S2(m, k, One, inv * L, inv * X));
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-10", "S4 Eq. (10) \"Letting lambda = 0 and x = 0\"",
        "S_i(m,k|mu,0,0) = mu^{m-k} S_i(m,k); symbolic mu",
        [=](const Grid& g, CaseSink& s) {
            for (long m : g.values("m")) {
                for (long k = 0; k <= m; ++k) {
                    s.scalar(kv("kind", 1, "m", m, "k", k), S1(m, k, U, Zero, Zero),
                             U.pow(m - k) * stirling1(m, k));
                    s.scalar(kv("kind", 2, "m", m, "k", k), S2(m, k, U, Zero, Zero),
                             U.pow(m - k) * stirling2(m, k));
                }
            }
        }});

    out.push_back(Identity{
        "eq-9", "S4.1 Eq. (9) \"yields S_n^{-1}[mu,lambda,x] = s_n[mu,lambda,x]\"",
        "orthogonality of the first-type matrices; symbolic mu, lambda, x",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                const StirlingParams p(U, L, X);
                const LowerTri big = stirling_matrix_first_type(n, p, 2);
                const LowerTri small = stirling_matrix_first_type(n, p, 1);
                const LowerTri id = LowerTri::identity(n);
                s.matrix(kv("n", n, "side", "S*s"), big.mul(small), id);
                s.matrix(kv("n", n, "side", "s*S"), small.mul(big), id);
            }
        }});

    out.push_back(Identity{
        "eq-4", "S4.1 Eq. (4) \"Putting m = i-1 gives\"",
        "S_2(i,j|mu,lambda,0) = sum C(i-1,k-1)(mu-lambda|lambda)_{i-k} S_2(k-1,j-1|mu,lambda,0)",
        [=](const Grid& g, CaseSink& s) {
            for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                for (long j = 1; j <= i; ++j) {
                    MultiPoly rhs;
                    for (long k = j; k <= i; ++k)
                        rhs += binom(i - 1, k - 1) *
                               (gff(U - L, L, i - k) * S2(k - 1, j - 1, U, L, Zero));
                    s.scalar(kv("i", i, "j", j), S2(i, j, U, L, Zero), rhs);
                }
            }
        }});

    out.push_back(Identity{
        "vertical-recurrences", "S4.1 \"the well known vertical recurrence\"",
        "classical vertical recurrence for S_2 and the S_1 counterpart at x = 0",
        [=](const Grid& g, CaseSink& s) {
            for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                for (long j = 1; j <= i; ++j) {
                    Rational classical;
                    for (long k = j; k <= i; ++k)
                        classical += (binom(i - 1, k - 1) * stirling2(k - 1, j - 1));
                    s.scalar(kv("kind", 2, "i", i, "j", j), stirling2(i, j), classical);

                    MultiPoly rhs;
                    for (long k = j; k <= i; ++k)
                        rhs += binom(k - 1, j - 1) *
                               (S1(i - 1, k - 1, U, L, Zero) * gff(L - U, L, k - j));
                    s.scalar(kv("kind", 1, "i", i, "j", j), S1(i, j, U, L, Zero), rhs);
                }
            }
        }});

    out.push_back(Identity{
        "shifted-orth-pair", "S4.1 \"We also have\"",
        "index-shifted orthogonality pair at x = 0; symbolic mu, lambda",
        [=](const Grid& g, CaseSink& s) {
            for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                for (long j = 1; j <= i; ++j) {
                    MultiPoly rhs1;
                    MultiPoly rhs2;
                    for (long k = j; k <= i; ++k) {
                        rhs1 += S2(i, k, U, L, Zero) * S1(k - 1, j - 1, U, L, Zero);
                        rhs2 += S2(i - 1, k - 1, U, L, Zero) * S1(k, j, U, L, Zero);
                    }
                    s.scalar(kv("display", 1, "i", i, "j", j),
                             binom(i - 1, j - 1) * gff(U - L, L, i - j), rhs1);
                    s.scalar(kv("display", 2, "i", i, "j", j),
                             binom(i - 1, j - 1) * gff(L - U, L, i - j), rhs2);
                }
            }
        }});

    out.push_back(Identity{
        "eq-19", "S4.1 Eq. (19) \"which yields\"",
        "S_n[mu,lambda,0] = P_n[lambda,mu-lambda]([1] (+) S_{n-1}[mu,lambda,0]); n >= 2",
        [=](const Grid& g, CaseSink& s) {
            for (long n : filtered(g, "n", [](long v) { return v >= 2; })) {
                const StirlingParams p(U, L, Zero);
                const LowerTri rhs =
                    pascal(n, L, U - L)
                        .mul(LowerTri::identity(1).direct_sum(
                            stirling_matrix_first_type(n - 1, p, 2)));
                s.matrix(kv("n", n), stirling_matrix_first_type(n, p, 2), rhs);
            }
        }});

    out.push_back(Identity{
        "S-Q-factorization", "S4.1 \"we have the following factorization\"",
        "S_n[mu,lambda,0] = Q_n[lambda,mu-lambda] ... Q_1[lambda,mu-lambda]; symbolic",
        [=](const Grid& g, CaseSink& s) {
            for (long n : g.values("n")) {
                s.matrix(kv("n", n),
                         stirling_matrix_first_type(n, StirlingParams(U, L, Zero), 2),
                         q_product(n, L, U - L));
            }
        }});
}

}  // namespace degenmat::cat
