#ifndef DEGENMAT_FAMILIES_HPP
#define DEGENMAT_FAMILIES_HPP

#include "degenmat/lower_tri.hpp"
#include "degenmat/sequences.hpp"

namespace degenmat {

/// Pascal functional matrix: (P_n[lam,x])_{i,j} = C(i-1,j-1) (x|lam)_{i-j}.
LowerTri pascal(long n, const MultiPoly& lam, const MultiPoly& xx);

/// [1] (+) P_k[lam,x]; for k = 0 this is the 1x1 identity.
LowerTri pbar(long k, const MultiPoly& lam, const MultiPoly& xx);

/// Summation-type matrix R_n[lam,x] with R_{i,j} = (x|lam)_{i-1}/(x-lam|lam)_{j-1}
/// for i > j. Constructed at rational bindings only; ZeroDenominator when a
/// denominator vanishes. Symbolic statements about R go through t_matrix
/// inversion instead (see r_matrix_poly).
LowerTri r_matrix(long n, const Rational& lam, const Rational& xx);

/// T_n[lam,x]: the inverse of R_n[lam,x]. Entries are polynomial:
/// (-1)^{i-j} lam^{i-j-1} ((i-2)!/(j-1)!) x for i > j.
LowerTri t_matrix(long n, const MultiPoly& lam, const MultiPoly& xx);

/// Polynomial form of R_n[lam,x], computed as t_matrix(n,lam,x)^{-1}. Total for
/// every parameter value, and equal to r_matrix wherever the latter is defined.
LowerTri r_matrix_poly(long n, const MultiPoly& lam, const MultiPoly& xx);

/// G_k[lam,x] = I_{n-k} (+) R_k[lam,x] (with G_n = R_n), R built via t-inversion.
LowerTri g_factor(long n, long k, const MultiPoly& lam, const MultiPoly& xx);

/// Q_k[lam,x] = I_{n-k} (+) P_k[lam,x] (with Q_n = P_n).
LowerTri q_factor(long n, long k, const MultiPoly& lam, const MultiPoly& xx);

/// Degenerate Bernoulli matrix: (B_n^{(w)}[lam,x])_{i,j} = C(i-1,j-1) beta_{i-j}^{(w)}(lam,x).
LowerTri bernoulli_matrix(long n, long w, const MultiPoly& lam, const MultiPoly& xx);

/// Second-kind analogue: (L_n^{(w)}[lam,x])_{i,j} = C(i-1,j-1) alpha_{i-j}^{(w)}(lam,x).
LowerTri l_matrix(long n, long w, const MultiPoly& lam, const MultiPoly& xx);

/// First-type generalized Stirling matrices: entries S_kind(i,j|mu,lambda,x).
/// kind 1 is s_n[mu,lambda,x], kind 2 is S_n[mu,lambda,x].
LowerTri stirling_matrix_first_type(long n, const StirlingParams& p, int kind);

/// Second-type generalized Stirling matrices G_{n,h}[1,lam,x] (kind 2) and
/// g_{n,h}[1,lam,x] (kind 1): unit diagonal, and for i > j >= 1 with j >= h the
/// entry C(i-1,j-1)/C(i-h,j-h) * S_kind(i-h,j-h|1,lam,x); zero otherwise.
LowerTri stirling_matrix_second_type(long n, long h, const MultiPoly& lam, const MultiPoly& xx,
                                     int kind);

}  // namespace degenmat

#endif
