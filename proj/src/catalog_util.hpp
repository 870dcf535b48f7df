#ifndef DEGENMAT_CATALOG_UTIL_HPP
#define DEGENMAT_CATALOG_UTIL_HPP

#include <string>
#include <utility>
#include <vector>

#include "degenmat/combinatorics.hpp"
#include "degenmat/families.hpp"
#include "degenmat/ledger.hpp"
#include "degenmat/sequences.hpp"

namespace degenmat::cat {

// Registrars, one per paper section group.
void register_pascal(std::vector<Identity>& out);
void register_bernoulli(std::vector<Identity>& out);
void register_stirling_first(std::vector<Identity>& out);
void register_stirling_second(std::vector<Identity>& out);
void register_carlitz(std::vector<Identity>& out);
void register_r_stirling(std::vector<Identity>& out);
void register_hyperharmonic(std::vector<Identity>& out);
void register_lah(std::vector<Identity>& out);

inline std::string ts(long v) { return std::to_string(v); }
inline std::string ts(int v) { return std::to_string(v); }
inline std::string ts(const Rational& v) { return v.str(); }
inline std::string ts(const std::string& v) { return v; }
inline std::string ts(const char* v) { return v; }

/// kv("i", 3, "h", -1) -> "i=3 h=-1"
template <typename V, typename... Rest>
std::string kv(const char* name, const V& value, Rest&&... rest) {
    std::string head = std::string(name) + '=' + ts(value);
    if constexpr (sizeof...(rest) == 0) {
        return head;
    } else {
        return head + ' ' + kv(std::forward<Rest>(rest)...);
    }
}

inline MultiPoly S1(long m, long k, MultiPoly mu, MultiPoly lam, MultiPoly x) {
    return stirling1_gen(m, k, StirlingParams(std::move(mu), std::move(lam), std::move(x)));
}

inline MultiPoly S2(long m, long k, MultiPoly mu, MultiPoly lam, MultiPoly x) {
    return stirling2_gen(m, k, StirlingParams(std::move(mu), std::move(lam), std::move(x)));
}

/// G_n ... G_1 with every factor built from the same (lam, x).
inline LowerTri g_product(long n, const MultiPoly& lam, const MultiPoly& xx) {
    LowerTri acc = g_factor(n, n, lam, xx);
    for (long k = n - 1; k >= 1; --k) acc = acc.mul(g_factor(n, k, lam, xx));
    return acc;
}

inline LowerTri q_product(long n, const MultiPoly& lam, const MultiPoly& xx) {
    LowerTri acc = q_factor(n, n, lam, xx);
    for (long k = n - 1; k >= 1; --k) acc = acc.mul(q_factor(n, k, lam, xx));
    return acc;
}

/// Builds a lower-triangular matrix from per-row cell strings in the
/// polynomial text format.
inline LowerTri matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    LowerTri m(static_cast<long>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.set(static_cast<long>(i + 1), static_cast<long>(j + 1),
                  MultiPoly::parse(rows[i][j]));
    return m;
}

/// Values of a named range filtered by a predicate.
template <typename Pred>
std::vector<long> filtered(const Grid& g, const std::string& name, Pred keep) {
    std::vector<long> out;
    for (long v : g.values(name))
        if (keep(v)) out.push_back(v);
    return out;
}

}  // namespace degenmat::cat

#endif
