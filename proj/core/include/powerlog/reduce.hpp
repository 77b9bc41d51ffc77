#ifndef POWERLOG_REDUCE_HPP
#define POWERLOG_REDUCE_HPP

#include <map>

#include "powerlog/problem.hpp"

namespace powerlog {

/* Verdict on the theorem hypothesis: every dF/dy_j on the solution jets
 * begins at x^m (with equality required for j = n), m read off dF/dy_n.
 */
struct ConditionReport {
    int m = -1;
    std::vector<RatFunc> a; // a_0 .. a_n at the x^m level (zero when val > m)
    bool holds = false;
    // strong reading: every partial has valuation exactly m
    bool strict = false;
    int depth_used = 0;
    bool stable = false;

    const RatFunc &an() const { return a.back(); }
};

// m is the valuation of dF/dy_n on the seed-prefix jets; errors with
// "indeterminate" if that partial is all-zero up to depth.
ConditionReport check_condition(const Problem &problem, int depth);

struct EllChoice {
    int ell = 0;
    int p = 0;   // common degree of the normalized a_j at infinity
    Poly Pinf;   // indicial polynomial at infinity, in lambda
    std::vector<Integer> roots; // integer roots of Pinf
};

// Smallest ell > m such that P_inf has no integer root exceeding ell.
EllChoice choose_ell(const ConditionReport &report);

struct ReducedMonomial {
    std::vector<int> q; // exponents of u_j = (delta+ell)^j u, size n+1
    int mu = 0;
    RatFunc b;
};

/* The reduced equation L(delta) u = x M(x, ln x, u-jets) with
 * a_n normalized to 1; an_orig keeps the pre-normalization leading
 * coefficient so the original expansion can be reconstructed exactly.
 */
struct ReducedEquation {
    int ell = 0;
    int n = 0;
    int m = 0;
    std::vector<RatFunc> a; // normalized, a[n] == 1
    RatFunc an_orig;
    std::vector<ReducedMonomial> monomials;
    int p = 0;
    Poly Pinf;
};

// Substitute y = phi_ell + x^ell u, expand, divide by an_orig * x^{m+ell}.
// The exact reconstruction identity is re-checked internally.
ReducedEquation reduce_equation(const Problem &problem, const ConditionReport &report, int ell);

/* Expansion of F(x, prefix-jets + x^shift u-jets) as a polynomial in the
 * formal jet variables u_j = (delta+shift)^j u with power-log series
 * coefficients. Exposed for the seed-extension step and for tests.
 */
using UPolynomial = std::map<std::vector<int>, PowerLogSeries>;
UPolynomial expand_in_jets(const AlgebraicODE &F, const PowerLogSeries &prefix, int shift);

// Rebuilds the expansion from (a, monomials, an_orig) and compares with
// a fresh expansion of F; true iff they agree exactly.
bool verify_reduction(const Problem &problem, const ReducedEquation &red);

} // namespace powerlog

#endif
