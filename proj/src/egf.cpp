#include "degenmat/egf.hpp"

#include <string>

#include "degenmat/combinatorics.hpp"
#include "degenmat/errors.hpp"

namespace degenmat {

EgfSeries EgfSeries::mul(const EgfSeries& other) const {
    if (order() != other.order())
        throw OrderMismatch(std::to_string(order()) + " vs " + std::to_string(other.order()));
    const long n = order();
    EgfSeries out(n);
    for (long m = 0; m <= n; ++m) {
        MultiPoly c;
        for (long k = 0; k <= m; ++k) {
            const MultiPoly& a = coeffs_[static_cast<std::size_t>(k)];
            const MultiPoly& b = other.coeffs_[static_cast<std::size_t>(m - k)];
            if (a.is_zero() || b.is_zero()) continue;
            c += binom(m, k) * (a * b);
        }
        out[m] = std::move(c);
    }
    return out;
}

EgfSeries EgfSeries::inv() const {
    if (coeffs_[0] != MultiPoly(Rational(1))) throw NonUnitConstant();
    const long n = order();
    EgfSeries out(n);
    out[0] = MultiPoly(Rational(1));
    // Unit lower-triangular solve: sum_k C(m,k) a_k b_{m-k} = 0 for m >= 1.
    for (long m = 1; m <= n; ++m) {
        MultiPoly acc;
        for (long k = 1; k <= m; ++k) {
            const MultiPoly& a = coeffs_[static_cast<std::size_t>(k)];
            if (a.is_zero()) continue;
            acc += binom(m, k) * (a * out[m - k]);
        }
        out[m] = -acc;
    }
    return out;
}

EgfSeries EgfSeries::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    EgfSeries result = one(order());
    for (long i = 0; i < k; ++i) result = result.mul(*this);
    return result;
}

}  // namespace degenmat
