#include "catalog_util.hpp"

namespace degenmat::cat {

namespace {

// Falling factorial of an integer: v(v-1)...(v-n+1).
Rational ffall(long v, long n) { return gff(MultiPoly(Rational(v)), 1, n).constant_value(); }

}  // namespace

void register_r_stirling(std::vector<Identity>& out) {
    const MultiPoly L = sym_lambda();
    const MultiPoly X = sym_x();
    const MultiPoly One(Rational(1));
    const MultiPoly Zero;

    out.push_back(Identity{
        "eq-11", "S5.2 Eq. (11) \"Setting mu = -1 in (8)\"",
        "S_1(m,k|1,-lambda,-x) = (-1)^{m-k} S_1(m,k|-1,lambda,x); symbolic lambda, x",
        [=](const Grid& g, CaseSink& s) {
            for (long m : g.values("m"))
                for (long k = 0; k <= m; ++k)
                    s.scalar(kv("m", m, "k", k), S1(m, k, One, -L, -X),
                             alt_sign(m - k) * S1(m, k, -One, L, X));
        }});

    out.push_back(Identity{
        "eq-11a", "S5.2 Eq. (11a) \"Setting mu = -1 in (8)\"",
        "S_2(m,k|1,-lambda,-x) = (-1)^{m-k} S_2(m,k|-1,lambda,x); symbolic lambda, x",
        [=](const Grid& g, CaseSink& s) {
            for (long m : g.values("m"))
                for (long k = 0; k <= m; ++k)
                    s.scalar(kv("m", m, "k", k), S2(m, k, One, -L, -X),
                             alt_sign(m - k) * S2(m, k, -One, L, X));
        }});

    out.push_back(Identity{
        "r-stirling-reduction", "S5.2 \"for lambda = 0 and nonnegative integer x = r\"",
        "S_1(m,k|1,0,-r) = (-1)^{m-k}[m+r,k+r]_r and S_2(m,k|1,0,-r) = {m+r,k+r}_r, "
        "checked against the enumeration oracles at small sizes",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long m : g.values("m")) {
                    for (long k = 0; k <= m; ++k) {
                        s.scalar(kv("kind", 1, "r", r, "m", m, "k", k),
                                 S1(m, k, One, Zero, MultiPoly(Rational(-r))).constant_value(),
                                 alt_sign(m - k) * r_stirling1(m + r, k + r, r));
                        s.scalar(kv("kind", 2, "r", r, "m", m, "k", k),
                                 S2(m, k, One, Zero, MultiPoly(Rational(-r))).constant_value(),
                                 r_stirling2(m + r, k + r, r));
                        if (m + r <= 8) {
                            s.scalar(kv("oracle", "cycles", "r", r, "m", m, "k", k),
                                     r_stirling1(m + r, k + r, r),
                                     Rational(count_r_cycle_permutations(
                                         static_cast<int>(m + r), static_cast<int>(k + r),
                                         static_cast<int>(r))));
                            s.scalar(kv("oracle", "blocks", "r", r, "m", m, "k", k),
                                     r_stirling2(m + r, k + r, r),
                                     Rational(count_r_partitions(static_cast<int>(m + r),
                                                                 static_cast<int>(k + r),
                                                                 static_cast<int>(r))));
                        }
                    }
                }
            }
        }});

    out.push_back(Identity{
        "r-stirling-order01", "S5.2 \"[m k]_0 = [m k]_1 = [m k]\"",
        "rank 0 and rank 1 r-Stirling numbers agree with the classical ones; m >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long m : filtered(g, "m", [](long v) { return v >= 1; })) {
                for (long k = 0; k <= m; ++k) {
                    const Rational bracket = alt_sign(m - k) * stirling1(m, k);
                    s.scalar(kv("kind", 1, "rank", 0, "m", m, "k", k), r_stirling1(m, k, 0),
                             bracket);
                    s.scalar(kv("kind", 1, "rank", 1, "m", m, "k", k), r_stirling1(m, k, 1),
                             bracket);
                    s.scalar(kv("kind", 2, "rank", 0, "m", m, "k", k), r_stirling2(m, k, 0),
                             stirling2(m, k));
                    s.scalar(kv("kind", 2, "rank", 1, "m", m, "k", k), r_stirling2(m, k, 1),
                             stirling2(m, k));
                }
            }
        }});

    out.push_back(Identity{
        "eq-72-1", "S5.2 Eq. (72-1) \"The following are special cases\"",
        "[i+r,j+r]_r = sum C(k,j)[i+p,k+p]_p (r-p)^{k-j}; r, p >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long p : g.values("p")) {
                    for (long i : g.values("i")) {
                        for (long j = 0; j <= i; ++j) {
                            Rational rhs;
                            for (long k = j; k <= i; ++k)
                                rhs += binom(k, j) * r_stirling1(i + p, k + p, p) *
                                       Rational(r - p).pow(k - j);
                            s.scalar(kv("r", r, "p", p, "i", i, "j", j),
                                     r_stirling1(i + r, j + r, r), rhs);
                        }
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-72-2", "S5.2 \"for h = 1, p = r - 1\"",
        "[i+r,j+r]_r = (1/(i+1)) sum C(k+1,j)[i+r,k+r]_{r-1}; r >= 1, j >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : filtered(g, "r", [](long v) { return v >= 1; })) {
                for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                    for (long j = 1; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k + 1, j) * r_stirling1(i + r, k + r, r - 1);
                        s.scalar(kv("r", r, "i", i, "j", j), r_stirling1(i + r, j + r, r),
                                 Rational(1, i + 1) * rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-72-3", "S5.2 \"for h = j, r = p + j\"",
        "C(i,j) <p+j>_{i-j} = sum [i+p,k+p]_p {k,j}; p >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long p : g.values("p")) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += r_stirling1(i + p, k + p, p) * stirling2(k, j);
                        const Rational lhs =
                            binom(i, j) *
                            rising(MultiPoly(Rational(p + j)), i - j).constant_value();
                        s.scalar(kv("p", p, "i", i, "j", j), lhs, rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "s2-diag-weight", "S5.2 \"and we use that\"",
        "S_2(k,m|1,0,m) = (-1)^{k-m} {k,m}",
        [=](const Grid& g, CaseSink& s) {
            for (long k : g.values("m")) {
                for (long m = 0; m <= k; ++m) {
                    s.scalar(kv("k", k, "m", m),
                             S2(k, m, One, Zero, MultiPoly(Rational(m))).constant_value(),
                             alt_sign(k - m) * stirling2(k, m));
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-72-4", "S5.2 \"Additionally, for p = r - 1\"",
        "[i+r,j+r]_r = sum C(k,j)[i+r-1,k+r-1]_{r-1}; r >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : filtered(g, "r", [](long v) { return v >= 1; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += binom(k, j) * r_stirling1(i + r - 1, k + r - 1, r - 1);
                        s.scalar(kv("r", r, "i", i, "j", j), r_stirling1(i + r, j + r, r), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-72-5", "S5.2 \"and p = r + 1\"",
        "[i+r,j+r]_r = sum (-1)^{k-j} C(k,j)[i+r+1,k+r+1]_{r+1}; r >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += alt_sign(k - j) * binom(k, j) *
                                   r_stirling1(i + r + 1, k + r + 1, r + 1);
                        s.scalar(kv("r", r, "i", i, "j", j), r_stirling1(i + r, j + r, r), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-7a2-0", "S5.2 \"Some identities deduced from (7a2)\"",
        "{i+r,j+r}_r = sum C(k,j){i+p,k+p}_p (r-p)_{k-j}; r, p >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long p : g.values("p")) {
                    for (long i : g.values("i")) {
                        for (long j = 0; j <= i; ++j) {
                            Rational rhs;
                            for (long k = j; k <= i; ++k)
                                rhs += binom(k, j) * r_stirling2(i + p, k + p, p) *
                                       ffall(r - p, k - j);
                            s.scalar(kv("r", r, "p", p, "i", i, "j", j),
                                     r_stirling2(i + r, j + r, r), rhs);
                        }
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-7a2-1", "S5.2 Eq. (7a2-1) \"for h = 0, r = p - 1\"",
        "{i+p-1,j+p-1}_{p-1} = (1/j!) sum (-1)^{k-j} {i+p,k+p}_p k!; p >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long p : filtered(g, "p", [](long v) { return v >= 1; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += alt_sign(k - j) * r_stirling2(i + p, k + p, p) * factorial(k);
                        s.scalar(kv("p", p, "i", i, "j", j),
                                 r_stirling2(i + p - 1, j + p - 1, p - 1),
                                 Rational(1) / factorial(j) * rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-7a2-2", "S5.2 Eq. (7a2-2) \"for h = 1, p = r\"",
        "{i-1+r,j-1+r}_r = (1/(i(j-1)!)) sum (-1)^{k-j} k!/(k-j+1) {i+r,k+r}_r; j >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                    for (long j = 1; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += alt_sign(k - j) * factorial(k) / Rational(k - j + 1) *
                                   r_stirling2(i + r, k + r, r);
                        s.scalar(kv("r", r, "i", i, "j", j),
                                 r_stirling2(i - 1 + r, j - 1 + r, r),
                                 Rational(1, i) / factorial(j - 1) * rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-7a2-4", "S5.2 \"for h = 1, p = r + 1\"",
        "{i-1+r,j-1+r}_r via {i+r+1,k+r+1}_{r+1} and harmonic numbers; j >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                    for (long j = 1; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += alt_sign(k - j) * r_stirling2(i + r + 1, k + r + 1, r + 1) *
                                   factorial(k) * hyperharmonic(k - j + 1, 1);
                        s.scalar(kv("r", r, "i", i, "j", j),
                                 r_stirling2(i - 1 + r, j - 1 + r, r),
                                 Rational(1, i) / factorial(j - 1) * rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-7a2-3", "S5.2 Eq. (7a2-3) \"for h = 1 and p = r - 1\"",
        "(i/j){i-1+r,j-1+r}_r - {i+r-1,j+r-1}_{r-1} as a weighted sum; r >= 1, j >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : filtered(g, "r", [](long v) { return v >= 1; })) {
                for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                    for (long j = 1; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j + 1; k <= i; ++k)
                            rhs += alt_sign(k - j) * factorial(k) /
                                   Rational((k + 1 - j) * (k - j)) *
                                   r_stirling2(i + r - 1, k + r - 1, r - 1);
                        const Rational lhs =
                            Rational(i, j) * r_stirling2(i - 1 + r, j - 1 + r, r) -
                            r_stirling2(i + r - 1, j + r - 1, r - 1);
                        s.scalar(kv("r", r, "i", i, "j", j), lhs,
                                 Rational(-1) / factorial(j) * rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-regular-1", "S5.2 \"regular Stirling numbers of the second kind satisfy\"",
        "{i,j} = (1/j!) sum (-1)^{k-j} {i+1,k+1} k!",
        [=](const Grid& g, CaseSink& s) {
            for (long i : g.values("i")) {
                for (long j = 0; j <= i; ++j) {
                    Rational rhs;
                    for (long k = j; k <= i; ++k)
                        rhs += alt_sign(k - j) * stirling2(i + 1, k + 1) * factorial(k);
                    s.scalar(kv("i", i, "j", j), stirling2(i, j),
                             Rational(1) / factorial(j) * rhs);
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-regular-2", "S5.2 \"for j >= 1, r = 1 in (7a2-2)\"",
        "{i,j} = (1/(i(j-1)!)) sum (-1)^{k-j} k!/(k-j+1) {i+1,k+1}; j >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                for (long j = 1; j <= i; ++j) {
                    Rational rhs;
                    for (long k = j; k <= i; ++k)
                        rhs += alt_sign(k - j) * factorial(k) / Rational(k - j + 1) *
                               stirling2(i + 1, k + 1);
                    s.scalar(kv("i", i, "j", j), stirling2(i, j),
                             Rational(1, i) / factorial(j - 1) * rhs);
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-regular-3", "S5.2 \"for j >= 1, r = 1 in (7a2-3)\"",
        "{i,j} = (1/((j-i)(j-1)!)) sum_{k>j} (-1)^{k-j} k!/((k-j+1)(k-j)) {i,k}; i > j >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long i : filtered(g, "i", [](long v) { return v >= 2; })) {
                for (long j = 1; j < i; ++j) {
                    Rational rhs;
                    for (long k = j + 1; k <= i; ++k)
                        rhs += alt_sign(k - j) * factorial(k) /
                               Rational((k - j + 1) * (k - j)) * stirling2(i, k);
                    s.scalar(kv("i", i, "j", j), stirling2(i, j),
                             Rational(1, j - i) / factorial(j - 1) * rhs);
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-6-1", "S5.2 \"The following are special cases of (6)\"",
        "C(i,j) B_{i-j}(p) = sum (-1)^{i-k}(i/k){i,k}[k+p,j+p]_p; j >= 1, p >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long p : g.values("p")) {
                for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                    for (long j = 1; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += alt_sign(i - k) * Rational(i, k) * stirling2(i, k) *
                                   r_stirling1(k + p, j + p, p);
                        const Rational lhs =
                            binom(i, j) *
                            bernoulli_classic(i - j, 1, MultiPoly(Rational(p))).constant_value();
                        s.scalar(kv("p", p, "i", i, "j", j), lhs, rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-6-2", "S5.2 \"for h = j = 1, p = 0\"",
        "B_i(r) = sum (-1)^k k!/(k+1) {i+r,k+r}_r; r >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long i : g.values("i")) {
                    Rational rhs;
                    for (long k = 0; k <= i; ++k)
                        rhs += alt_sign(k) * factorial(k) / Rational(k + 1) *
                               r_stirling2(i + r, k + r, r);
                    s.scalar(kv("r", r, "i", i),
                             bernoulli_classic(i, 1, MultiPoly(Rational(r))).constant_value(),
                             rhs);
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-6-3", "S5.2 \"for h = -1, r = p - 1\"",
        "C(i+1,j) = sum (-1)^{i-k}(k+1){i+p,k+p}_{p-1}[k+p,j+p]_p; p >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long p : filtered(g, "p", [](long v) { return v >= 1; })) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += alt_sign(i - k) * Rational(k + 1) *
                                   r_stirling2(i + p, k + p, p - 1) *
                                   r_stirling1(k + p, j + p, p);
                        s.scalar(kv("p", p, "i", i, "j", j), binom(i + 1, j), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-6-4", "S5.2 \"for h = -1, r = p\"",
        "C(i+1,j) = sum (-1)^{k-j}(k+1){i+1+p,k+1+p}_p[k+p,j+p]_p; p >= 0",
        [=](const Grid& g, CaseSink& s) {
            for (long p : g.values("p")) {
                for (long i : g.values("i")) {
                    for (long j = 0; j <= i; ++j) {
                        Rational rhs;
                        for (long k = j; k <= i; ++k)
                            rhs += alt_sign(k - j) * Rational(k + 1) *
                                   r_stirling2(i + 1 + p, k + 1 + p, p) *
                                   r_stirling1(k + p, j + p, p);
                        s.scalar(kv("p", p, "i", i, "j", j), binom(i + 1, j), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.2-B-self", "S5.2 \"by making use of\"",
        "B_i(i+1) = sum ((i-k)!/(i-k+1)) {i+k,i}_k",
        [=](const Grid& g, CaseSink& s) {
            for (long i : g.values("i")) {
                Rational rhs;
                for (long k = 0; k <= i; ++k)
                    rhs += factorial(i - k) / Rational(i - k + 1) * r_stirling2(i + k, i, k);
                s.scalar(kv("i", i),
                         bernoulli_classic(i, 1, MultiPoly(Rational(i + 1))).constant_value(),
                         rhs);
            }
        }});
}

}  // namespace degenmat::cat
