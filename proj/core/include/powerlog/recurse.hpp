#ifndef POWERLOG_RECURSE_HPP
#define POWERLOG_RECURSE_HPP

#include "powerlog/reduce.hpp"

namespace powerlog {

struct RecursionBounds {
    // adaptive heuristics: pole-order slope and infinity-degree slope
    int C = 1;
    int c1 = 1;
    bool exact_mode = false;
    // Lemma-2/3 constants, valid in exact mode only
    int C_exact = 0;
    int C_inf = 0;
};

/* State of the coefficient recursion for the reduced equation. Stored
 * coefficients R_{ell+k} have been verified against their linear ODE by
 * exact back-substitution.
 */
struct RecursionState {
    ReducedEquation reduced;
    Poly q_den; // squarefree common denominator of the a_j and b_{q,mu}
    RecursionBounds bounds;
    std::vector<RatFunc> coeffs;                 // index k-1 -> R_{ell+k}
    std::vector<std::vector<RatFunc>> jets;      // jets[k-1][j] = (ell+k+d/dt)^j R_{ell+k}

    int computed() const { return static_cast<int>(coeffs.size()); }
    const RatFunc &coeff(int k) const { return coeffs.at(static_cast<size_t>(k) - 1); }
};

RecursionState make_recursion_state(const ReducedEquation &red, bool exact_bounds = false);

// Exact coefficient of x^k in x*M(x, ln x, psi-jets); needs R_{ell+1}..R_{ell+k-1}.
RatFunc build_rhs(const RecursionState &state, int k);

/* Unique rational solution of sum_j a_j(t) (lambda0 + d/dt)^j R = rhs
 * via the ansatz R = N/q_den^e with adaptive (e, deg N) escalation.
 * Throws solver_error("no rational solution within bounds") at the cap.
 */
RatFunc solve_rational_ode(const std::vector<RatFunc> &a, long lambda0, const RatFunc &rhs,
                           const Poly &q_den, const RecursionBounds &bounds);

// computes R_{ell+k} for the next k and appends it (with its jets)
void advance(RecursionState &state);

struct GrowthRow {
    int k = 0;
    int pole_order = 0; // max multiplicity over finite poles (= -ord, worst pole)
    int deg_inf = 0;    // -ord_inf (negative when the coefficient decays)
    long bound_pole = 0, bound_inf = 0;
    bool pass_pole = false, pass_inf = false;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    int C_fit = 0;  // max_k ceil(pole_order/k)
    int c1_fit = 0; // max_k ceil(max(0, deg_inf)/k)
    bool all_pass = true;
};

GrowthReport growth_report(const RecursionState &state);

/* Computes the missing seed coefficients k = seed_covered+1 .. target by
 * matching the x^{m+k} coefficient of the expansion; each step is
 * guarded to be linear in the unknown and consistent with the report.
 */
void extend_seed(Problem &problem, const ConditionReport &report, int target);

struct ExpandResult {
    PowerLogSeries series; // phi to order N (exact polynomial prefix)
    ConditionReport report;
    ReducedEquation reduced;
    RecursionState state;
    int N = 0;
};

// Full driver: condition check, ell choice, seed extension, reduction,
// recursion to order N, residual-valuation verification.
ExpandResult expand(const Problem &problem, int N, bool exact_bounds = false);

// All roots of p lying in Q(i); p splits over Q(i) iff the count equals deg p.
std::vector<GaussianRational> gaussian_rational_roots(const Poly &p);

} // namespace powerlog

#endif
