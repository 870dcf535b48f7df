#include "degenmat/sequences.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "degenmat/combinatorics.hpp"
#include "degenmat/errors.hpp"

namespace degenmat {

namespace {

const MultiPoly kOne(Rational(1));

// Series caches, keyed by the canonical text of the parameters. Entries only
// ever grow; recomputation on growth keeps the code simple and stays exact.
std::mutex g_cache_mutex;

using BetaKey = std::tuple<char, long, std::string, std::string>;  // tag, w, lam, x
std::map<BetaKey, std::vector<MultiPoly>> g_beta_cache;

using StirKey = std::tuple<int, std::string, std::string, std::string>;  // kind, mu, lam, x
std::map<StirKey, std::vector<std::vector<MultiPoly>>> g_stir_cache;

// Coefficients of ((1+lambda t)^{1/lambda} - 1)/t as an EGF: the k-th
// coefficient is (1|lambda)_{k+1} / (k+1). Unit constant term.
EgfSeries beta_base_series(long order, const MultiPoly& lam) {
    EgfSeries s(order);
    for (long k = 0; k <= order; ++k)
        s[k] = gff(kOne, lam, k + 1) * Rational(1, k + 1);
    return s;
}

// Coefficients of ((1+t)^lambda - 1)/(lambda t) as an EGF: the k-th coefficient
// is (lambda|1)_{k+1} / (lambda (k+1)) = prod_{i=1..k}(lambda-i) / (k+1).
EgfSeries alpha_base_series(long order, const MultiPoly& lam) {
    EgfSeries s(order);
    for (long k = 0; k <= order; ++k)
        s[k] = gff_skip_base(lam, kOne, k + 1) * Rational(1, k + 1);
    return s;
}

// Returns the m-th coefficient by value; the copy happens under the lock, so
// later larger requests may regrow the cached vector safely.
MultiPoly beta_like_coeff(char tag, long m, long w, const MultiPoly& lam, const MultiPoly& xx) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    BetaKey key{tag, w, lam.str(), xx.str()};
    auto& slot = g_beta_cache[key];
    if (static_cast<long>(slot.size()) <= m) {
        EgfSeries base = (tag == 'b') ? beta_base_series(m, lam) : alpha_base_series(m, lam);
        EgfSeries expo(m);
        for (long k = 0; k <= m; ++k)
            expo[k] = (tag == 'b') ? gff(xx, lam, k) : gff(xx, kOne, k);
        EgfSeries prod = base.pow(-w).mul(expo);
        slot.clear();
        slot.reserve(static_cast<std::size_t>(m) + 1);
        for (long k = 0; k <= m; ++k) slot.push_back(prod[k]);
    }
    return slot[static_cast<std::size_t>(m)];
}

// S_kind(m,k) from a cached triangle built via the generating functions:
// row mm of F^kk * G divided by kk!. The value is copied out under the lock.
MultiPoly stirling_coeff(int kind, long m, long k, const StirlingParams& p) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    StirKey key{kind, p.mu.str(), p.lambda.str(), p.x.str()};
    auto& slot = g_stir_cache[key];
    if (static_cast<long>(slot.size()) <= m) {
        // kind 1: F_j = (lambda|mu)_j / lambda, G_j = (x|mu)_j
        // kind 2: F_j = (mu|lambda)_j / mu,    G_j = (-x|lambda)_j
        const MultiPoly& fb = (kind == 1) ? p.lambda : p.mu;
        const MultiPoly& fs = (kind == 1) ? p.mu : p.lambda;
        const MultiPoly gb = (kind == 1) ? p.x : -p.x;
        const MultiPoly& gs = (kind == 1) ? p.mu : p.lambda;
        EgfSeries f(m);
        for (long j = 1; j <= m; ++j) f[j] = gff_skip_base(fb, fs, j);
        EgfSeries h(m);
        for (long j = 0; j <= m; ++j) h[j] = gff(gb, gs, j);

        slot.assign(static_cast<std::size_t>(m) + 1,
                    std::vector<MultiPoly>(static_cast<std::size_t>(m) + 1));
        Rational inv_kfact(1);
        for (long k = 0; k <= m; ++k) {
            if (k > 0) {
                h = h.mul(f);
                inv_kfact /= Rational(k);
            }
            for (long mm = k; mm <= m; ++mm)
                slot[static_cast<std::size_t>(mm)][static_cast<std::size_t>(k)] =
                    h[mm] * inv_kfact;
        }
    }
    return slot;
}

MultiPoly stirling_gen(int kind, long m, long k, const StirlingParams& p) {
    if (m < 0 || k < 0) throw std::invalid_argument("stirling indices must be nonnegative");
    if (k > m) return MultiPoly();
    return stirling_triangle(kind, m, p)[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

Rational as_rational(const MultiPoly& p) { return p.constant_value(); }

}  // namespace

StirlingParams::StirlingParams(MultiPoly mu_, MultiPoly lambda_, MultiPoly x_)
    : mu(std::move(mu_)), lambda(std::move(lambda_)), x(std::move(x_)) {
    if (mu.is_zero() && lambda.is_zero() && x.is_zero())
        throw BadParams("(mu, lambda, x) must not be (0, 0, 0)");
}

std::string StirlingParams::str() const {
    return "(" + mu.str() + ", " + lambda.str() + ", " + x.str() + ")";
}

MultiPoly beta(long m, long w, const MultiPoly& lam, const MultiPoly& xx) {
    if (m < 0) throw std::invalid_argument("beta index must be nonnegative");
    return beta_like_coeffs('b', m, w, lam, xx)[static_cast<std::size_t>(m)];
}

MultiPoly alpha(long m, long w, const MultiPoly& lam, const MultiPoly& xx) {
    if (m < 0) throw std::invalid_argument("alpha index must be nonnegative");
    return beta_like_coeffs('a', m, w, lam, xx)[static_cast<std::size_t>(m)];
}

MultiPoly stirling1_gen(long m, long k, const StirlingParams& p) {
    return stirling_gen(1, m, k, p);
}

MultiPoly stirling2_gen(long m, long k, const StirlingParams& p) {
    return stirling_gen(2, m, k, p);
}

MultiPoly stirling_by_recurrence(int kind, long m, long k, const StirlingParams& p) {
    if (kind != 1 && kind != 2) throw std::invalid_argument("stirling kind must be 1 or 2");
    if (m < 0 || k < 0) throw std::invalid_argument("stirling indices must be nonnegative");
    if (k > m) return MultiPoly();
    const MultiPoly step_coeff = (kind == 1) ? p.lambda : p.mu;
    const MultiPoly drift = (kind == 1) ? p.x : -p.x;
    const MultiPoly damp = (kind == 1) ? p.mu : p.lambda;
    std::vector<std::vector<MultiPoly>> row(static_cast<std::size_t>(m) + 1,
                                            std::vector<MultiPoly>(static_cast<std::size_t>(m) + 1));
    row[0][0] = kOne;
    for (long mm = 0; mm < m; ++mm) {
        for (long kk = 0; kk <= mm + 1; ++kk) {
            MultiPoly v;
            if (kk > 0) v += row[mm][kk - 1];
            if (kk <= mm)
                v += (Rational(kk) * step_coeff + drift - Rational(mm) * damp) * row[mm][kk];
            row[mm + 1][kk] = std::move(v);
        }
    }
    return row[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

Rational stirling1(long m, long k) {
    return as_rational(stirling1_gen(m, k, StirlingParams(1, 0, 0)));
}

Rational stirling2(long m, long k) {
    return as_rational(stirling2_gen(m, k, StirlingParams(1, 0, 0)));
}

Rational r_stirling1(long m, long k, long r) {
    if (r < 0) throw std::invalid_argument("r-Stirling rank must be nonnegative");
    if (m < r || k < r) return Rational(0);
    return as_rational(stirling1_gen(m - r, k - r, StirlingParams(-1, 0, Rational(r))));
}

Rational r_stirling2(long m, long k, long r) {
    if (r < 0) throw std::invalid_argument("r-Stirling rank must be nonnegative");
    if (m < r || k < r) return Rational(0);
    return alt_sign(m - k) *
           as_rational(stirling2_gen(m - r, k - r, StirlingParams(-1, 0, Rational(r))));
}

MultiPoly carlitz_r1(long m, long k, const MultiPoly& xx) {
    return alt_sign(m - k) * stirling1_gen(m, k, StirlingParams(1, 0, -xx));
}

MultiPoly carlitz_r2(long m, long k, const MultiPoly& xx) {
    return stirling2_gen(m, k, StirlingParams(1, 0, -xx));
}

MultiPoly degen_stirling1(long m, long k, const MultiPoly& lam) {
    return alt_sign(m - k) * stirling1_gen(m, k, StirlingParams(1, lam, 0));
}

MultiPoly degen_stirling2(long m, long k, const MultiPoly& lam) {
    return stirling2_gen(m, k, StirlingParams(1, lam, 0));
}

MultiPoly howard1(long m, long k, const MultiPoly& lam, const MultiPoly& xx) {
    return alt_sign(m - k) * stirling1_gen(m, k, StirlingParams(1, lam, lam - xx));
}

MultiPoly howard2(long m, long k, const MultiPoly& lam, const MultiPoly& xx) {
    return stirling2_gen(m, k, StirlingParams(1, lam, -xx));
}

Rational lah(long m, long k) {
    if (m < 0 || k < 0) throw std::invalid_argument("lah indices must be nonnegative");
    if (k > m) return Rational(0);
    if (m == 0) return Rational(1);
    if (k == 0) return Rational(0);
    return factorial(m) / factorial(k) * binom(m - 1, k - 1);
}

MultiPoly bernoulli_classic(long m, long w, const MultiPoly& xx) {
    return beta(m, w, MultiPoly(), xx);
}

MultiPoly bernoulli_second(long m, long w, const MultiPoly& xx) {
    return alpha(m, w, MultiPoly(), xx) * (Rational(1) / factorial(m));
}

Rational hyperharmonic(long m, long r) {
    if (r < 0 || m <= 0) return Rational(0);
    std::vector<Rational> h(static_cast<std::size_t>(m) + 1);
    for (long i = 1; i <= m; ++i) h[static_cast<std::size_t>(i)] = Rational(1, i);
    for (long level = 1; level <= r; ++level) {
        Rational acc(0);
        for (long i = 1; i <= m; ++i) {
            acc += h[static_cast<std::size_t>(i)];
            h[static_cast<std::size_t>(i)] = acc;
        }
    }
    return h[static_cast<std::size_t>(m)];
}

}  // namespace degenmat
