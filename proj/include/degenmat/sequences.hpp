#ifndef DEGENMAT_SEQUENCES_HPP
#define DEGENMAT_SEQUENCES_HPP

#include "degenmat/egf.hpp"
#include "degenmat/multipoly.hpp"

namespace degenmat {

/// Parameter triple (mu, lambda, x) of the generalized Stirling numbers.
/// The identically-zero triple is excluded.
struct StirlingParams {
    MultiPoly mu;
    MultiPoly lambda;
    MultiPoly x;

    StirlingParams(MultiPoly mu_, MultiPoly lambda_, MultiPoly x_);

    std::string str() const;
};

/// Degenerate Bernoulli polynomial of the first kind beta_m^{(w)}(lambda, x):
/// coefficient of t^m/m! in (t/((1+lambda t)^{1/lambda}-1))^w (1+lambda t)^{x/lambda}.
/// Any integer order w is allowed; lam and xx may be rationals or polynomials.
MultiPoly beta(long m, long w, const MultiPoly& lam, const MultiPoly& xx);

/// Degenerate Bernoulli polynomial of the second kind alpha_m^{(w)}(lambda, x):
/// coefficient of t^m/m! in (lambda t/((1+t)^lambda-1))^w (1+t)^x.
MultiPoly alpha(long m, long w, const MultiPoly& lam, const MultiPoly& xx);

/// Generalized Stirling numbers S_1(m,k|mu,lambda,x) and S_2(m,k|mu,lambda,x).
/// Zero when k > m.
MultiPoly stirling1_gen(long m, long k, const StirlingParams& p);
MultiPoly stirling2_gen(long m, long k, const StirlingParams& p);

/// Independent oracle: the same numbers by the triangular recurrence
///   S_1(m+1,k) = S_1(m,k-1) + (k*lambda + x - m*mu) S_1(m,k)
///   S_2(m+1,k) = S_2(m,k-1) + (k*mu - x - m*lambda) S_2(m,k)
/// obtained by differentiating the generating functions. kind is 1 or 2.
MultiPoly stirling_by_recurrence(int kind, long m, long k, const StirlingParams& p);

// --- Classical and named specializations -----------------------------------

/// Signed Stirling numbers of the first kind s(m,k) = S_1(m,k|1,0,0).
Rational stirling1(long m, long k);
/// Stirling numbers of the second kind S(m,k) = S_2(m,k|1,0,0).
Rational stirling2(long m, long k);

/// r-Stirling numbers [m,k]_r and {m,k}_r (zero when m < r or k < r).
Rational r_stirling1(long m, long k, long r);
Rational r_stirling2(long m, long k, long r);

/// Carlitz's weighted Stirling numbers R_1(m,k,x) and R_2(m,k,x).
MultiPoly carlitz_r1(long m, long k, const MultiPoly& xx);
MultiPoly carlitz_r2(long m, long k, const MultiPoly& xx);

/// Carlitz's degenerate Stirling numbers S_1(m,k|lambda), S_2(m,k|lambda).
MultiPoly degen_stirling1(long m, long k, const MultiPoly& lam);
MultiPoly degen_stirling2(long m, long k, const MultiPoly& lam);

/// Howard's degenerate weighted Stirling numbers S_1(m,k,x|lambda), S_2(m,k,x|lambda).
MultiPoly howard1(long m, long k, const MultiPoly& lam, const MultiPoly& xx);
MultiPoly howard2(long m, long k, const MultiPoly& lam, const MultiPoly& xx);

/// Lah numbers via the closed form (m!/k!) C(m-1,k-1); L(0,0) = 1.
Rational lah(long m, long k);

/// Higher order Bernoulli polynomial B_m^{(w)}(x) = beta_m^{(w)}(0, x).
MultiPoly bernoulli_classic(long m, long w, const MultiPoly& xx);

/// Bernoulli polynomial of the second kind b_m^{(w)}(x) = alpha_m^{(w)}(0, x)/m!.
MultiPoly bernoulli_second(long m, long w, const MultiPoly& xx);

/// Hyperharmonic number H_m^r. H_m^0 = 1/m for m >= 1; zero for r < 0 or m <= 0.
Rational hyperharmonic(long m, long r);

// --- Brute-force combinatorial oracles (small sizes) ------------------------

/// Number of partitions of {1..m} into k nonempty blocks, by enumeration.
long long count_set_partitions(int m, int k);
/// Number of permutations of {1..m} with exactly k cycles, by enumeration.
long long count_cycle_permutations(int m, int k);
/// Partitions of {1..m} into k blocks with 1..r in distinct blocks ({m,k}_r).
long long count_r_partitions(int m, int k, int r);
/// Permutations of {1..m} with k cycles and 1..r in distinct cycles ([m,k]_r).
long long count_r_cycle_permutations(int m, int k, int r);

}  // namespace degenmat

#endif
