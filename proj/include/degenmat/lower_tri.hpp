#ifndef DEGENMAT_LOWER_TRI_HPP
#define DEGENMAT_LOWER_TRI_HPP

#include <vector>

#include "degenmat/multipoly.hpp"

namespace degenmat {

/// n x n lower-triangular matrix over MultiPoly with 1-based index semantics.
/// Strictly upper entries are identically zero and are not stored.
class LowerTri {
public:
    explicit LowerTri(long n);

    static LowerTri identity(long n);

    long size() const { return n_; }

    /// Entry (i, j), 1 <= i, j <= n; zero above the diagonal.
    const MultiPoly& at(long i, long j) const;
    void set(long i, long j, MultiPoly value);

    bool unit_diagonal() const;

    LowerTri mul(const LowerTri& other) const;        // SizeMismatch
    LowerTri inv() const;                             // NonUnitDiagonal
    LowerTri pow(long k) const;                       // negative k requires unit diagonal
    LowerTri sub(const LowerTri& other) const;        // entrywise difference

    /// Block-diagonal composition; the result has order size() + other.size().
    LowerTri direct_sum(const LowerTri& other) const;

    friend bool operator==(const LowerTri& a, const LowerTri& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const LowerTri& a, const LowerTri& b) { return !(a == b); }
    friend LowerTri operator*(const LowerTri& a, const LowerTri& b) { return a.mul(b); }

private:
    std::size_t index(long i, long j) const {
        return static_cast<std::size_t>((i - 1) * i / 2 + (j - 1));
    }

    long n_;
    std::vector<MultiPoly> e_;  // packed lower triangle, row-major
};

LowerTri direct_sum(const LowerTri& a, const LowerTri& b);

}  // namespace degenmat

#endif
