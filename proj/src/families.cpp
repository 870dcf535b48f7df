#include "degenmat/families.hpp"

#include <stdexcept>
#include <string>

#include "degenmat/combinatorics.hpp"
#include "degenmat/errors.hpp"

namespace degenmat {

namespace {
const MultiPoly kOne(Rational(1));

void check_factor_index(long n, long k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("factor index k must satisfy 1 <= k <= n");
}
}  // namespace

LowerTri pascal(long n, const MultiPoly& lam, const MultiPoly& xx) {
    LowerTri m(n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) m.set(i, j, binom(i - 1, j - 1) * gff(xx, lam, i - j));
    return m;
}

LowerTri pbar(long k, const MultiPoly& lam, const MultiPoly& xx) {
    if (k == 0) return LowerTri::identity(1);
    return LowerTri::identity(1).direct_sum(pascal(k, lam, xx));
}

LowerTri r_matrix(long n, const Rational& lam, const Rational& xx) {
    // Denominators (x-lam|lam)_{j-1} evaluated once per column.
    std::vector<Rational> den(static_cast<std::size_t>(n), Rational(1));
    Rational acc(1);
    for (long j = 2; j <= n; ++j) {
        acc *= xx - Rational(j - 1) * lam;
        den[static_cast<std::size_t>(j - 1)] = acc;
    }
    std::vector<Rational> num(static_cast<std::size_t>(n), Rational(1));
    acc = Rational(1);
    for (long i = 2; i <= n; ++i) {
        acc *= xx - Rational(i - 2) * lam;
        num[static_cast<std::size_t>(i - 1)] = acc;  // (x|lam)_{i-1}
    }
    LowerTri m(n);
    for (long i = 1; i <= n; ++i) {
        m.set(i, i, kOne);
        for (long j = 1; j < i; ++j) {
            const Rational& d = den[static_cast<std::size_t>(j - 1)];
            if (d.is_zero())
                throw ZeroDenominator("(x-lambda|lambda)_" + std::to_string(j - 1) +
                                      " vanishes at lambda=" + lam.str() + ", x=" + xx.str());
            m.set(i, j, MultiPoly(num[static_cast<std::size_t>(i - 1)] / d));
        }
    }
    return m;
}

LowerTri t_matrix(long n, const MultiPoly& lam, const MultiPoly& xx) {
    LowerTri m(n);
    for (long i = 1; i <= n; ++i) {
        m.set(i, i, kOne);
        for (long j = 1; j < i; ++j) {
            const Rational ratio = factorial(i - 2) / factorial(j - 1);
            m.set(i, j, alt_sign(i - j) * ratio * (lam.pow(i - j - 1) * xx));
        }
    }
    return m;
}

LowerTri r_matrix_poly(long n, const MultiPoly& lam, const MultiPoly& xx) {
    return t_matrix(n, lam, xx).inv();
}

LowerTri g_factor(long n, long k, const MultiPoly& lam, const MultiPoly& xx) {
    check_factor_index(n, k);
    LowerTri r = r_matrix_poly(k, lam, xx);
    if (k == n) return r;
    return LowerTri::identity(n - k).direct_sum(r);
}

LowerTri q_factor(long n, long k, const MultiPoly& lam, const MultiPoly& xx) {
    check_factor_index(n, k);
    LowerTri p = pascal(k, lam, xx);
    if (k == n) return p;
    return LowerTri::identity(n - k).direct_sum(p);
}

LowerTri bernoulli_matrix(long n, long w, const MultiPoly& lam, const MultiPoly& xx) {
    LowerTri m(n);
    for (long d = 0; d < n; ++d) {
        const MultiPoly b = beta(d, w, lam, xx);
        for (long i = d + 1; i <= n; ++i) m.set(i, i - d, binom(i - 1, i - d - 1) * b);
    }
    return m;
}

LowerTri l_matrix(long n, long w, const MultiPoly& lam, const MultiPoly& xx) {
    LowerTri m(n);
    for (long d = 0; d < n; ++d) {
        const MultiPoly a = alpha(d, w, lam, xx);
        for (long i = d + 1; i <= n; ++i) m.set(i, i - d, binom(i - 1, i - d - 1) * a);
    }
    return m;
}

LowerTri stirling_matrix_first_type(long n, const StirlingParams& p, int kind) {
    if (kind != 1 && kind != 2) throw std::invalid_argument("stirling kind must be 1 or 2");
    LowerTri m(n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j)
            m.set(i, j, kind == 1 ? stirling1_gen(i, j, p) : stirling2_gen(i, j, p));
    return m;
}

LowerTri stirling_matrix_second_type(long n, long h, const MultiPoly& lam, const MultiPoly& xx,
                                     int kind) {
    if (kind != 1 && kind != 2) throw std::invalid_argument("stirling kind must be 1 or 2");
    const StirlingParams p(kOne, lam, xx);
    LowerTri m(n);
    for (long i = 1; i <= n; ++i) {
        m.set(i, i, kOne);
        for (long j = 1; j < i; ++j) {
            if (j < h) continue;  // zero by definition
            const Rational weight_den = binom(i - h, j - h);
            if (weight_den.is_zero())
                throw BadShift("C(" + std::to_string(i - h) + "," + std::to_string(j - h) +
                               ") vanishes for shift h=" + std::to_string(h));
            const Rational w = binom(i - 1, j - 1) / weight_den;
            m.set(i, j,
                  w * (kind == 1 ? stirling1_gen(i - h, j - h, p) : stirling2_gen(i - h, j - h, p)));
        }
    }
    return m;
}

}  // namespace degenmat
