#ifndef DEGENMAT_EGF_HPP
#define DEGENMAT_EGF_HPP

#include <vector>

#include "degenmat/multipoly.hpp"

namespace degenmat {

/// Truncated exponential generating function: coefficients a_0..a_N of
/// sum_m a_m t^m / m!. The stored coefficient is a_m itself (not a_m/m!), so
/// multiplication is the binomial convolution used by every identity here.
class EgfSeries {
public:
    explicit EgfSeries(long order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    }

    /// The multiplicative identity (1, 0, ..., 0).
    static EgfSeries one(long order) {
        EgfSeries s(order);
        s.coeffs_[0] = MultiPoly(Rational(1));
        return s;
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    const MultiPoly& operator[](long m) const { return coeffs_.at(static_cast<std::size_t>(m)); }
    MultiPoly& operator[](long m) { return coeffs_.at(static_cast<std::size_t>(m)); }

    /// Binomial convolution: c_m = sum_k C(m,k) a_k b_{m-k}. Orders must agree.
    EgfSeries mul(const EgfSeries& other) const;

    /// Multiplicative inverse up to the truncation order; requires a_0 = 1.
    EgfSeries inv() const;

    /// Integer power; negative exponents go through inv() and require a_0 = 1.
    EgfSeries pow(long k) const;

    friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) { return a.mul(b); }
    friend bool operator==(const EgfSeries& a, const EgfSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<MultiPoly> coeffs_;
};

}  // namespace degenmat

#endif
