#include "degenmat/lower_tri.hpp"

#include <stdexcept>
#include <string>

#include "degenmat/errors.hpp"

namespace degenmat {

namespace {
const MultiPoly kZero;
const MultiPoly kOne(Rational(1));
}  // namespace

LowerTri::LowerTri(long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix order must be positive");
    e_.resize(static_cast<std::size_t>(n * (n + 1) / 2));
}

LowerTri LowerTri::identity(long n) {
    LowerTri m(n);
    for (long i = 1; i <= n; ++i) m.set(i, i, kOne);
    return m;
}

const MultiPoly& LowerTri::at(long i, long j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("matrix index out of range");
    if (j > i) return kZero;
    return e_[index(i, j)];
}

void LowerTri::set(long i, long j, MultiPoly value) {
    if (i < 1 || i > n_ || j < 1 || j > n_ || j > i)
        throw std::out_of_range("matrix index out of range");
    e_[index(i, j)] = std::move(value);
}

bool LowerTri::unit_diagonal() const {
    for (long i = 1; i <= n_; ++i)
        if (at(i, i) != kOne) return false;
    return true;
}

LowerTri LowerTri::mul(const LowerTri& other) const {
    if (n_ != other.n_)
        throw SizeMismatch(std::to_string(n_) + " vs " + std::to_string(other.n_));
    LowerTri out(n_);
    for (long i = 1; i <= n_; ++i) {
        for (long j = 1; j <= i; ++j) {
            MultiPoly acc;
            for (long k = j; k <= i; ++k) {
                const MultiPoly& a = at(i, k);
                const MultiPoly& b = other.at(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc += a * b;
            }
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

LowerTri LowerTri::inv() const {
    if (!unit_diagonal()) throw NonUnitDiagonal();
    // Forward substitution: B_ii = 1, B_ij = -sum_{k=j}^{i-1} A_ik B_kj.
    LowerTri out(n_);
    for (long i = 1; i <= n_; ++i) {
        out.set(i, i, kOne);
        for (long j = i - 1; j >= 1; --j) {
            MultiPoly acc;
            for (long k = j; k < i; ++k) {
                const MultiPoly& a = at(i, k);
                if (a.is_zero()) continue;
                acc += a * out.at(k, j);
            }
            out.set(i, j, -acc);
        }
    }
    return out;
}

LowerTri LowerTri::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    LowerTri result = identity(n_);
    for (long i = 0; i < k; ++i) result = result.mul(*this);
    return result;
}

LowerTri LowerTri::sub(const LowerTri& other) const {
    if (n_ != other.n_)
        throw SizeMismatch(std::to_string(n_) + " vs " + std::to_string(other.n_));
    LowerTri out(n_);
    for (long i = 1; i <= n_; ++i)
        for (long j = 1; j <= i; ++j) out.set(i, j, at(i, j) - other.at(i, j));
    return out;
}

LowerTri LowerTri::direct_sum(const LowerTri& other) const {
    LowerTri out(n_ + other.n_);
    for (long i = 1; i <= n_; ++i)
        for (long j = 1; j <= i; ++j) out.set(i, j, at(i, j));
    for (long i = 1; i <= other.n_; ++i)
        for (long j = 1; j <= i; ++j) out.set(n_ + i, n_ + j, other.at(i, j));
    return out;
}

LowerTri direct_sum(const LowerTri& a, const LowerTri& b) { return a.direct_sum(b); }

}  // namespace degenmat
