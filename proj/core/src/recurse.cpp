#include "powerlog/recurse.hpp"

#include <algorithm>
#include <set>

namespace powerlog {

namespace {

// ---- root finding over Q(i) (used by the exact-bounds mode) ----

struct GInt {
    Integer re, im;
};

Integer gnorm(const GInt &z) { return z.re * z.re + z.im * z.im; }

bool gdivides(const GInt &d, const GInt &z) {
    Integer n = gnorm(d);
    if (n == 0)
        return false;
    // z * conj(d) / |d|^2 must have integer parts
    Integer re = z.re * d.re + z.im * d.im;
    Integer im = z.im * d.re - z.re * d.im;
    return re % n == 0 && im % n == 0;
}

// divisors of a nonzero Gaussian integer, including unit multiples
std::vector<GInt> gaussian_divisors(const GInt &z) {
    Integer n = gnorm(z);
    std::vector<GInt> divs;
    for (Integer d(1); d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        for (Integer part : {d, n / d}) {
            // lattice points a^2 + b^2 = part
            Integer a(0);
            for (; a * a <= part; ++a) {
                Integer b2 = part - a * a;
                if (!mpz_perfect_square_p(b2.get_mpz_t()))
                    continue;
                Integer b;
                mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
                std::vector<GInt> cands = {{a, b}, {a, -b}, {-a, b}, {-a, -b},
                                           {b, a}, {b, -a}, {-b, a}, {-b, -a}};
                for (const auto &w : cands) {
                    if (gnorm(w) == 0)
                        continue;
                    if (gdivides(w, z))
                        divs.push_back(w);
                }
            }
        }
    }
    return divs;
}

int mult_at(const Poly &p, const GaussianRational &t0) {
    if (p.is_zero())
        throw error("multiplicity in zero polynomial");
    Poly shifted = p.shifted(t0); // p(t + t0); multiplicity = low zero coefficients
    int m = 0;
    while (shifted.coeff(m).is_zero())
        ++m;
    return m;
}

int ord_at(const RatFunc &f, const GaussianRational &t0) {
    if (f.is_zero())
        throw error("order of zero function");
    return mult_at(f.num(), t0) - mult_at(f.den(), t0);
}

} // namespace

std::vector<GaussianRational> gaussian_rational_roots(const Poly &p) {
    if (p.is_zero())
        throw error("roots of zero polynomial");
    std::vector<GaussianRational> roots;
    if (p.degree() == 0)
        return roots;

    // strip t^v, remember the root 0
    Poly q = p;
    if (q.coeff(0).is_zero()) {
        roots.push_back(GaussianRational());
        int v = mult_at(q, GaussianRational());
        Poly tv = Poly::monomial(GaussianRational(1), v);
        q = Poly::divexact(q, tv);
        if (q.degree() == 0)
            return roots;
    }

    // clear denominators to Gaussian-integer coefficients
    Integer den_lcm(1);
    for (const auto &c : q.coeffs()) {
        den_lcm = lcm(den_lcm, c.re.get_den());
        den_lcm = lcm(den_lcm, c.im.get_den());
    }
    auto gint_of = [&](const GaussianRational &c) {
        Rational re = c.re * Rational(den_lcm);
        Rational im = c.im * Rational(den_lcm);
        return GInt{re.get_num(), im.get_num()};
    };
    GInt c0 = gint_of(q.coeff(0));
    GInt cd = gint_of(q.leading());

    std::vector<GInt> nums = gaussian_divisors(c0);
    std::vector<GInt> dens = gaussian_divisors(cd);
    std::set<std::pair<std::pair<Rational, Rational>, bool>> seen;
    for (const auto &u : nums) {
        for (const auto &v : dens) {
            Integer n2 = gnorm(v);
            // u / v = u * conj(v) / |v|^2
            Rational re(u.re * v.re + u.im * v.im, n2);
            Rational im(u.im * v.re - u.re * v.im, n2);
            re.canonicalize();
            im.canonicalize();
            GaussianRational cand(re, im);
            auto key = std::make_pair(std::make_pair(re, im), true);
            if (!seen.insert(key).second)
                continue;
            if (q.eval(cand).is_zero())
                roots.push_back(cand);
        }
    }
    return roots;
}

namespace {

Poly squarefree_common_denominator(const ReducedEquation &red) {
    Poly acc(1L);
    auto absorb = [&](const Poly &den) {
        if (den.is_one())
            return;
        acc = poly_lcm(acc, squarefree_part(den));
    };
    for (const auto &aj : red.a)
        if (!aj.is_zero())
            absorb(aj.den());
    for (const auto &mono : red.monomials)
        absorb(mono.b.den());
    return acc;
}

RecursionBounds heuristic_bounds(const ReducedEquation &red) {
    RecursionBounds b;
    int imb = 0, dinf = 0;
    for (const auto &mono : red.monomials) {
        imb = std::max(imb, std::max(0, mono.b.den().degree() - mono.b.num().degree()));
        dinf = std::max(dinf, std::max(0, -mono.b.ord_at_infinity()));
    }
    b.C = red.n + imb;
    b.c1 = std::max(1, dinf);
    return b;
}

void exact_bounds_from_indicial(const ReducedEquation &red, const Poly &q_den,
                                RecursionBounds &b) {
    std::vector<GaussianRational> delta_set = gaussian_rational_roots(q_den);
    if (static_cast<int>(delta_set.size()) != q_den.degree())
        throw solver_error("exact bounds unavailable: the common denominator does not split "
                           "into linear factors over Q(i)");
    int C = 1;
    for (const auto &t0 : delta_set) {
        // gamma = max_j (j - ord_{t0} a_j)
        int gamma = 0;
        std::vector<int> ord(red.a.size(), 0);
        for (size_t j = 0; j < red.a.size(); ++j) {
            if (red.a[j].is_zero())
                continue;
            ord[j] = ord_at(red.a[j], t0);
            gamma = std::max(gamma, static_cast<int>(j) - ord[j]);
        }
        // indicial polynomial P_{t0}(lambda) from the coefficients achieving gamma
        Poly P;
        for (size_t j = 0; j < red.a.size(); ++j) {
            if (red.a[j].is_zero())
                continue;
            if (static_cast<int>(j) - ord[j] != gamma)
                continue;
            // leading Laurent coefficient A_j = (a_j * (t-t0)^{gamma-j})(t0)
            Poly shift = (Poly::variable() - Poly(t0)).pow(static_cast<unsigned>(gamma - static_cast<int>(j)));
            RatFunc g = red.a[j] * RatFunc(shift);
            GaussianRational Aj = g.eval(t0);
            // falling factorial lambda (lambda-1) ... (lambda-j+1)
            Poly ff(1L);
            for (int i = 0; i < static_cast<int>(j); ++i)
                ff = ff * (Poly::variable() - Poly(static_cast<long>(i)));
            P += Aj * ff;
        }
        int C1 = 0;
        if (!P.is_zero())
            for (const Integer &r : integer_roots(P)) {
                Integer a = abs(r);
                C1 = std::max(C1, static_cast<int>(a.get_si()));
            }
        int C2 = 0;
        for (const auto &mono : red.monomials) {
            int w = 0;
            for (size_t j = 0; j < mono.q.size(); ++j)
                w += static_cast<int>(j) * mono.q[j];
            C2 = std::max(C2, -ord_at(mono.b, t0) + w);
        }
        C = std::max({C, C1, C2});
    }
    int C_inf = 1;
    for (const auto &mono : red.monomials)
        C_inf = std::max(C_inf, -mono.b.ord_at_infinity());
    b.exact_mode = true;
    b.C_exact = C;
    b.C_inf = C_inf;
}

} // namespace

RecursionState make_recursion_state(const ReducedEquation &red, bool exact_bounds) {
    RecursionState st;
    st.reduced = red;
    st.q_den = squarefree_common_denominator(red);
    st.bounds = heuristic_bounds(red);
    if (exact_bounds)
        exact_bounds_from_indicial(red, st.q_den, st.bounds);
    return st;
}

RatFunc build_rhs(const RecursionState &state, int k) {
    if (k < 1 || k - 1 > state.computed())
        throw error("build_rhs: coefficients up to k-1 must be computed first");
    const int n = state.reduced.n;

    // jet series psi_j = sum_kappa R^j_kappa x^kappa, known to order k-1
    std::vector<PowerLogSeries> psi;
    psi.reserve(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        PowerLogSeries s(k - 1);
        for (int kappa = 1; kappa <= std::min(k - 1, state.computed()); ++kappa)
            s.set_coeff(kappa, state.jets[static_cast<size_t>(kappa) - 1][static_cast<size_t>(j)]);
        psi.push_back(std::move(s));
    }

    RatFunc rhs;
    for (const auto &mono : state.reduced.monomials) {
        int target = k - 1 - mono.mu;
        if (target < 0)
            continue;
        int total = 0;
        for (int e : mono.q)
            total += e;
        if (target == 0) {
            if (total == 0)
                rhs += mono.b; // constant monomial feeds exactly k = mu+1
            continue;
        }
        if (total == 0 || target < total)
            continue; // each jet factor has valuation >= 1
        PowerLogSeries prod(target);
        prod.set_coeff(0, RatFunc(1L));
        for (int j = 0; j <= n; ++j)
            for (int rep = 0; rep < mono.q[static_cast<size_t>(j)]; ++rep)
                prod = prod * psi[static_cast<size_t>(j)].truncated(target);
        RatFunc c = prod.coeff(target);
        if (!c.is_zero())
            rhs += mono.b * c;
    }
    return rhs;
}

namespace {

// (lambda0 + d/dt) maps P/q^c to T_c(P)/q^{c+1} with
// T_c(P) = (lambda0 q - c q') P + q P'.
Poly chain_step(const Poly &P, const Poly &q, const Poly &qprime, long lambda0, long c) {
    Poly factor = GaussianRational(Rational(lambda0)) * q - GaussianRational(Rational(c)) * qprime;
    return factor * P + q * P.derivative();
}

struct OperatorData {
    Poly dA;                  // common denominator of the a_j
    std::vector<Poly> A;      // a_j * dA
    Poly q, qprime;
    std::vector<Poly> qpow;   // q^0 .. q^n
};

OperatorData prepare_operator(const std::vector<RatFunc> &a, const Poly &q_den) {
    OperatorData od;
    od.q = q_den.is_zero() ? Poly(1L) : q_den;
    od.qprime = od.q.derivative();
    od.dA = Poly(1L);
    for (const auto &aj : a)
        if (!aj.is_zero())
            od.dA = poly_lcm(od.dA, aj.den());
    for (const auto &aj : a) {
        if (aj.is_zero())
            od.A.push_back(Poly());
        else
            od.A.push_back(aj.num() * Poly::divexact(od.dA, aj.den()));
    }
    int n = static_cast<int>(a.size()) - 1;
    od.qpow.push_back(Poly(1L));
    for (int i = 1; i <= n; ++i)
        od.qpow.push_back(od.qpow.back() * od.q);
    return od;
}

// single ansatz attempt: R = N/q^e with deg N <= D
std::optional<RatFunc> attempt_solve(const OperatorData &od, const std::vector<RatFunc> &a,
                                     long lambda0, const RatFunc &rhs, long e, long D) {
    const int n = static_cast<int>(a.size()) - 1;

    // rhs * dA * q^{e+n} must be a polynomial at this e
    RatFunc rp = rhs * RatFunc(od.dA);
    for (long i = 0; i < e + n; ++i)
        rp *= RatFunc(od.q);
    if (!rp.is_polynomial())
        return std::nullopt;
    Poly rhs_poly = rp.num();

    // columns: basis N = t^s, s = 0..D
    std::vector<Poly> cols;
    cols.reserve(static_cast<size_t>(D) + 1);
    int max_deg = rhs_poly.degree();
    for (long s = 0; s <= D; ++s) {
        // Chain_j(t^s) iteratively, level c = e .. e+j-1
        Poly chain = Poly::monomial(GaussianRational(1), static_cast<int>(s));
        Poly col;
        for (int j = 0; j <= n; ++j) {
            if (j > 0)
                chain = chain_step(chain, od.q, od.qprime, lambda0, e + j - 1);
            if (od.A[static_cast<size_t>(j)].is_zero())
                continue;
            col += od.A[static_cast<size_t>(j)] * od.qpow[static_cast<size_t>(n - j)] * chain;
        }
        max_deg = std::max(max_deg, col.degree());
        cols.push_back(std::move(col));
    }

    GMatrix M(static_cast<size_t>(max_deg) + 1, GVector(static_cast<size_t>(D) + 1));
    GVector b(static_cast<size_t>(max_deg) + 1);
    for (long s = 0; s <= D; ++s)
        for (int r = 0; r <= cols[static_cast<size_t>(s)].degree(); ++r)
            M[static_cast<size_t>(r)][static_cast<size_t>(s)] = cols[static_cast<size_t>(s)].coeff(r);
    for (int r = 0; r <= rhs_poly.degree(); ++r)
        b[static_cast<size_t>(r)] = rhs_poly.coeff(r);

    LinearSolution sol = solve_linear_system(M, b);
    if (!sol.consistent)
        return std::nullopt;
    if (!sol.kernel.empty())
        throw solver_error("homogeneous equation has a nonzero rational solution; "
                           "the shift lambda0 = " + std::to_string(lambda0) +
                           " does not determine the coefficient uniquely");
    Poly N{std::vector<GaussianRational>(sol.particular.begin(), sol.particular.end())};
    Poly qe(1L);
    for (long i = 0; i < e; ++i)
        qe = qe * od.q;
    return RatFunc(N, qe);
}

} // namespace

RatFunc solve_rational_ode(const std::vector<RatFunc> &a, long lambda0, const RatFunc &rhs,
                           const Poly &q_den, const RecursionBounds &bounds) {
    if (a.empty() || a.back().is_zero())
        throw error("solve_rational_ode: a_n must be nonzero");
    if (!rhs.is_zero()) {
        // rhs poles must lie among the roots of q_den
        if (!rhs.is_polynomial()) {
            Poly sf = squarefree_part(rhs.den());
            Poly g = q_den.is_zero() ? Poly(1L) : poly_gcd(sf, q_den);
            if (Poly::divexact(sf, g).degree() > 0)
                throw solver_error("right-hand side has poles outside the common pole set");
        }
    } else {
        return RatFunc(); // uniqueness forces the zero solution
    }

    OperatorData od = prepare_operator(a, q_den);
    const long degq = std::max(0, od.q.degree());

    auto verify = [&](const RatFunc &R) {
        RatFunc acc, cur = R;
        for (size_t j = 0; j < a.size(); ++j) {
            if (!a[j].is_zero())
                acc += a[j] * cur;
            cur = RatFunc(GaussianRational(Rational(lambda0))) * cur + cur.derivative();
        }
        return acc == rhs;
    };

    if (bounds.exact_mode) {
        long e = degq > 0 ? static_cast<long>(bounds.C_exact) : 0;
        long D = static_cast<long>(bounds.C_inf) + e * degq;
        auto R = attempt_solve(od, a, lambda0, rhs, e, D);
        if (!R)
            throw solver_error("no rational solution within the exact Lemma-2/3 bounds");
        if (!verify(*R))
            throw solver_error("internal: solver produced a non-solution");
        return *R;
    }

    // cheap polynomial-first attempt (covers Dulac-type instances where the
    // coefficients stay polynomial even though the operator has poles)
    {
        auto R0 = attempt_solve(od, a, lambda0, rhs, 0, bounds.c1 + degq);
        if (R0 && verify(*R0))
            return *R0;
    }

    long e0 = degq > 0 ? static_cast<long>(bounds.C) : 0;
    long D0 = static_cast<long>(bounds.c1) + e0 * degq;
    long cap_e = 4 * e0 + 4;
    long cap_D = 4 * D0 + 4 * (degq + 1) + 4;
    long e = e0, D = D0;
    while (e <= cap_e && D <= cap_D) {
        auto R = attempt_solve(od, a, lambda0, rhs, e, D);
        if (R) {
            if (!verify(*R))
                throw solver_error("internal: solver produced a non-solution");
            return *R;
        }
        e += degq > 0 ? 1 : 0;
        D += degq + 1;
    }
    throw solver_error("no rational solution within bounds");
}

void advance(RecursionState &state) {
    const int k = state.computed() + 1;
    const long lambda0 = state.reduced.ell + k;

    RatFunc rhs = build_rhs(state, k);
    RecursionBounds kb = state.bounds;
    if (!kb.exact_mode) {
        kb.C = state.bounds.C * k;
        kb.c1 = state.bounds.c1 * k;
    } else {
        kb.C_exact = state.bounds.C_exact * k;
        kb.C_inf = state.bounds.C_inf * k;
    }
    RatFunc R = solve_rational_ode(state.reduced.a, lambda0, rhs, state.q_den, kb);

    // exactness invariant: the stored coefficient satisfies its ODE
    std::vector<RatFunc> js;
    js.reserve(state.reduced.a.size());
    RatFunc cur = R, acc;
    for (size_t j = 0; j < state.reduced.a.size(); ++j) {
        js.push_back(cur);
        if (!state.reduced.a[j].is_zero())
            acc += state.reduced.a[j] * cur;
        cur = RatFunc(GaussianRational(Rational(lambda0))) * cur + cur.derivative();
    }
    if (!(acc == rhs))
        throw solver_error("internal: recursion residual is nonzero at k = " + std::to_string(k), k);

    state.coeffs.push_back(R);
    state.jets.push_back(std::move(js));
}

GrowthReport growth_report(const RecursionState &state) {
    GrowthReport rep;
    if (state.computed() == 0)
        throw error("growth report requires at least one computed coefficient");
    long C_used = state.bounds.exact_mode ? state.bounds.C_exact : state.bounds.C;
    long c1_used = state.bounds.exact_mode ? state.bounds.C_inf : state.bounds.c1;
    for (int k = 1; k <= state.computed(); ++k) {
        const RatFunc &R = state.coeff(k);
        GrowthRow row;
        row.k = k;
        if (R.is_zero()) {
            row.pole_order = 0;
            row.deg_inf = 0; // by convention for the zero coefficient
        } else {
            row.pole_order = R.den().degree() > 0 ? max_root_multiplicity(R.den()) : 0;
            row.deg_inf = -R.ord_at_infinity();
        }
        row.bound_pole = C_used * k;
        row.bound_inf = c1_used * k;
        row.pass_pole = row.pole_order <= row.bound_pole;
        row.pass_inf = row.deg_inf <= row.bound_inf;
        rep.all_pass = rep.all_pass && row.pass_pole && row.pass_inf;
        int cf = (row.pole_order + k - 1) / k;
        int c1f = (std::max(0, row.deg_inf) + k - 1) / k;
        rep.C_fit = std::max(rep.C_fit, cf);
        rep.c1_fit = std::max(rep.c1_fit, c1f);
        rep.rows.push_back(row);
    }
    return rep;
}

void extend_seed(Problem &problem, const ConditionReport &report, int target) {
    const int n = problem.order();
    const int m = report.m;
    if (problem.seed_covered < 0 && problem.seed.empty())
        throw error("cannot extend an empty seed");

    for (int k = std::max(0, problem.seed_covered) + 1; k <= target; ++k) {
        PowerLogSeries prefix = problem.seed_series(k - 1);
        UPolynomial E = expand_in_jets(problem.ode, prefix, k);

        RatFunc s0;
        for (const auto &[q, s] : E) {
            int deg = 0;
            for (int e : q)
                deg += e;
            auto val = s.valuation();
            if (!val)
                continue;
            if (deg == 0) {
                if (*val < m + k)
                    throw solver_error("seed extension: prefix does not satisfy the equation "
                                       "to order " + std::to_string(m + k - 1), k);
                s0 = s.coeff(m + k);
            } else if (deg == 1) {
                if (*val < m + k)
                    throw solver_error("seed extension: a linear term appears below x^{m+k}; "
                                       "the condition coefficients are not locked", k);
                int j = 0;
                for (int idx = 0; idx <= n; ++idx)
                    if (q[static_cast<size_t>(idx)] == 1)
                        j = idx;
                if (!(s.coeff(m + k) == report.a[static_cast<size_t>(j)]))
                    throw solver_error("seed extension: leading coefficient drifts at j = " +
                                       std::to_string(j), k);
            } else {
                if (*val <= m + k)
                    throw solver_error("seed extension: nonlinear interference at k = " +
                                       std::to_string(k) + "; the matching equation is not linear", k);
            }
        }

        // normalized linear equation  sum_j a_j (k + d/dt)^j R_k = -s0/a_n
        std::vector<RatFunc> a_norm(report.a.size());
        for (size_t j = 0; j < report.a.size(); ++j)
            a_norm[j] = report.a[j] / report.an();
        RatFunc rhs = -(s0 / report.an());

        Poly q_ext(1L);
        for (const auto &aj : a_norm)
            if (!aj.is_zero() && !aj.den().is_one())
                q_ext = poly_lcm(q_ext, squarefree_part(aj.den()));
        if (!rhs.is_zero() && !rhs.den().is_one())
            q_ext = poly_lcm(q_ext, squarefree_part(rhs.den()));

        RecursionBounds eb;
        eb.C = (n + 2) * k;
        eb.c1 = 2 * k + (rhs.is_zero() ? 0 : std::max(0, -rhs.ord_at_infinity()));
        RatFunc Rk = solve_rational_ode(a_norm, k, rhs, q_ext, eb);

        if (!Rk.is_zero())
            problem.seed.emplace_back(k, Rk);
        problem.seed_covered = k;
    }
}

ExpandResult expand(const Problem &problem_in, int N, bool exact_bounds) {
    Problem problem = problem_in;
    ExpandResult out;
    out.N = N;
    out.report = check_condition(problem, problem.depth());
    if (!out.report.holds)
        throw condition_error("the convergence condition does not hold; cannot expand");

    EllChoice chc = choose_ell(out.report);
    const int ell = chc.ell;
    const int m = out.report.m;

    if (problem.seed_covered < std::min(ell, N))
        extend_seed(problem, out.report, std::min(ell, N));

    if (N <= ell) {
        out.series = problem.seed_series(N);
        out.reduced.ell = ell;
        out.reduced.n = problem.order();
        out.reduced.m = m;
    } else {
        out.reduced = reduce_equation(problem, out.report, ell);
        out.state = make_recursion_state(out.reduced, exact_bounds);
        for (int k = 1; k <= N - ell; ++k) {
            try {
                advance(out.state);
            } catch (solver_error &e) {
                throw solver_error(std::string(e.what()) + " (while computing R_" +
                                   std::to_string(ell + k) + ")", ell + k);
            }
        }
        PowerLogSeries phi = problem.seed_series(ell);
        for (int k = 1; k <= N - ell; ++k)
            phi.set_coeff(ell + k, out.state.coeff(k));
        out.series = phi;
    }

    // whole-series identity: val(F(x, Phi_N)) >= N + m + 1, checked exactly
    PowerLogSeries residual = substitute(problem.ode, jet(out.series, problem.order(), 0));
    auto val = residual.valuation();
    if (val && *val < N + m + 1)
        throw solver_error("whole-series identity fails: residual valuation " +
                           std::to_string(*val) + " < " + std::to_string(N + m + 1));
    return out;
}

} // namespace powerlog
