#include "catalog_util.hpp"

namespace degenmat::cat {

void register_hyperharmonic(std::vector<Identity>& out) {
    const MultiPoly One(Rational(1));
    const MultiPoly Zero;

    out.push_back(Identity{
        "hyperharmonic-bracket", "S5.3 \"A combinatorial proof of this fact\"",
        "m! H_m^r = [m+r,1+r]_r = S_1(m,1|-1,0,r) = (-1)^{m-1} S_1(m,1|1,0,-r); m >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long m : filtered(g, "m", [](long v) { return v >= 1; })) {
                    const Rational lhs = factorial(m) * hyperharmonic(m, r);
                    s.scalar(kv("m", m, "r", r, "form", "bracket"), lhs,
                             r_stirling1(m + r, 1 + r, r));
                    s.scalar(kv("m", m, "r", r, "form", "S1(-1,0,r)"), lhs,
                             S1(m, 1, -One, Zero, MultiPoly(Rational(r))).constant_value());
                    s.scalar(kv("m", m, "r", r, "form", "S1(1,0,-r)"), lhs,
                             alt_sign(m - 1) *
                                 S1(m, 1, One, Zero, MultiPoly(Rational(-r))).constant_value());
                }
            }
        }});

    out.push_back(Identity{
        "sec5.3-71-1", "S5.3 \"we have from (71)\"",
        "i! H_{i+1}^r = sum (-1)^k B_k [i+r,k+r]_r",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long i : g.values("i")) {
                    Rational rhs;
                    for (long k = 0; k <= i; ++k)
                        rhs += alt_sign(k) * bernoulli_classic(k, 1, Zero).constant_value() *
                               r_stirling1(i + r, k + r, r);
                    s.scalar(kv("r", r, "i", i), factorial(i) * hyperharmonic(i + 1, r), rhs);
                }
            }
        }});

    out.push_back(Identity{
        "sec5.3-71-2", "S5.3 \"for h = x = 1, y = r\"",
        "i! H_{i+1}^{r-1} = sum B_k [i+r,k+r]_r; r >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : filtered(g, "r", [](long v) { return v >= 1; })) {
                for (long i : g.values("i")) {
                    Rational rhs;
                    for (long k = 0; k <= i; ++k)
                        rhs += bernoulli_classic(k, 1, Zero).constant_value() *
                               r_stirling1(i + r, k + r, r);
                    s.scalar(kv("r", r, "i", i), factorial(i) * hyperharmonic(i + 1, r - 1),
                             rhs);
                }
            }
        }});

    out.push_back(Identity{
        "sec5.3-71-3", "S5.3 \"for j = 1, y = r\"",
        "i! H_i^{r+p} = sum k [i+r,k+r]_r p^{k-1}; i >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long p : g.values("p")) {
                    for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                        Rational rhs;
                        for (long k = 1; k <= i; ++k)
                            rhs += Rational(k) * r_stirling1(i + r, k + r, r) *
                                   Rational(p).pow(k - 1);
                        s.scalar(kv("r", r, "p", p, "i", i),
                                 factorial(i) * hyperharmonic(i, r + p), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.3-71-4", "S5.3 \"i! H_i^p = sum k [i k] p^{k-1}\"",
        "the r = 0 case; i >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long p : g.values("p")) {
                for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                    Rational rhs;
                    for (long k = 1; k <= i; ++k)
                        rhs += Rational(k) * r_stirling1(i, k, 0) * Rational(p).pow(k - 1);
                    s.scalar(kv("p", p, "i", i), factorial(i) * hyperharmonic(i, p), rhs);
                }
            }
        }});

    out.push_back(Identity{
        "sec5.3-5a1", "S5.3 \"and from (5a1)\"",
        "H_i^{r-m} = sum ((-1)^{i-k}/(i-k)!) (m)_{i-k} H_k^r; m <= r, i >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long m = -3; m <= r; ++m) {
                    for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                        Rational rhs;
                        for (long k = 1; k <= i; ++k)
                            rhs += alt_sign(i - k) / factorial(i - k) *
                                   gff(MultiPoly(Rational(m)), 1, i - k).constant_value() *
                                   hyperharmonic(k, r);
                        s.scalar(kv("r", r, "m", m, "i", i), hyperharmonic(i, r - m), rhs);
                    }
                }
            }
        }});

    out.push_back(Identity{
        "eq-13", "S5.3 Eq. (13) \"is Eq. (7) of [26]\"",
        "sum C(i-k+p-1,p-1) H_k^r = H_i^{p+r}; p >= 1, i >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long p : filtered(g, "p", [](long v) { return v >= 1; })) {
                for (long r : g.values("r")) {
                    for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                        Rational lhs;
                        for (long k = 1; k <= i; ++k)
                            lhs += binom(i - k + p - 1, p - 1) * hyperharmonic(k, r);
                        s.scalar(kv("p", p, "r", r, "i", i), lhs, hyperharmonic(i, p + r));
                    }
                }
            }
        }});

    out.push_back(Identity{
        "sec5.3-sum-kH", "S5.3 \"for p = 2\"",
        "sum k H_k^r = (i+1) H_i^{r+1} - H_i^{r+2}; i >= 1",
        [=](const Grid& g, CaseSink& s) {
            for (long r : g.values("r")) {
                for (long i : filtered(g, "i", [](long v) { return v >= 1; })) {
                    Rational lhs;
                    for (long k = 1; k <= i; ++k) lhs += Rational(k) * hyperharmonic(k, r);
                    s.scalar(kv("r", r, "i", i), lhs,
                             Rational(i + 1) * hyperharmonic(i, r + 1) -
                                 hyperharmonic(i, r + 2));
                }
            }
        }});
}

}  // namespace degenmat::cat
