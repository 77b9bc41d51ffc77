#include "powerlog/reduce.hpp"

#include <algorithm>

namespace powerlog {

namespace {

Integer binom(int n, int k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

ConditionReport check_once(const Problem &problem, int depth) {
    const int n = problem.order();
    PowerLogSeries prefix = problem.seed_series(problem.seed_length() < 0 ? 0 : problem.seed_length());
    JetVector jets = jet(prefix.truncated(depth), n, 0);

    ConditionReport rep;
    rep.depth_used = depth;
    rep.a.assign(static_cast<size_t>(n) + 1, RatFunc());

    PowerLogSeries pn = partial_series(problem.ode, n, jets);
    auto vn = pn.valuation();
    if (!vn)
        throw condition_error("indeterminate: dF/dy_" + std::to_string(n) +
                              " vanishes up to depth " + std::to_string(depth));
    rep.m = *vn;
    rep.a[static_cast<size_t>(n)] = pn.coeff(rep.m);

    rep.holds = true;
    rep.strict = true;
    for (int j = 0; j < n; ++j) {
        PowerLogSeries pj = partial_series(problem.ode, j, jets);
        auto vj = pj.valuation();
        if (vj && *vj < rep.m) {
            rep.holds = false;
            rep.strict = false;
        } else if (!vj || *vj > rep.m) {
            rep.strict = false; // valuation strictly above m; weak reading accepts
        }
        rep.a[static_cast<size_t>(j)] = pj.coeff(rep.m);
    }
    return rep;
}

} // namespace

ConditionReport check_condition(const Problem &problem, int depth) {
    if (depth < 0)
        throw error("check depth must be nonnegative");
    ConditionReport rep = check_once(problem, depth);
    ConditionReport recheck = check_once(problem, depth + 1);
    rep.stable = (rep.m == recheck.m) && (rep.a == recheck.a);
    if (!rep.stable)
        rep.holds = false; // fail closed
    return rep;
}

EllChoice choose_ell(const ConditionReport &report) {
    if (!report.holds)
        throw condition_error("cannot choose ell: condition does not hold");
    const int n = static_cast<int>(report.a.size()) - 1;
    const RatFunc &an = report.an();

    EllChoice choice;
    // normalized coefficients at infinity: p = max_j(-ord_inf a_j/a_n)
    std::vector<RatFunc> norm(report.a.size());
    int p = 0; // a_n/a_n = 1 contributes 0
    for (int j = 0; j <= n; ++j) {
        norm[static_cast<size_t>(j)] = report.a[static_cast<size_t>(j)] / an;
        if (!norm[static_cast<size_t>(j)].is_zero())
            p = std::max(p, -norm[static_cast<size_t>(j)].ord_at_infinity());
    }
    choice.p = p;

    std::vector<GaussianRational> lam(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const RatFunc &f = norm[static_cast<size_t>(j)];
        if (f.is_zero())
            continue;
        if (-f.ord_at_infinity() == p) {
            // leading Laurent coefficient at infinity (den is monic)
            lam[static_cast<size_t>(j)] = f.num().leading();
        }
    }
    Poly Pinf;
    for (int j = 0; j <= n; ++j)
        Pinf += Poly::monomial(lam[static_cast<size_t>(j)], j);
    if (Pinf.is_zero())
        throw condition_error("indicial polynomial at infinity is identically zero");
    choice.Pinf = Pinf;
    choice.roots = integer_roots(Pinf);

    Integer ell(report.m + 1);
    for (const Integer &r : choice.roots)
        if (r > ell)
            ell = r;
    choice.ell = static_cast<int>(ell.get_si());
    return choice;
}

UPolynomial expand_in_jets(const AlgebraicODE &F, const PowerLogSeries &prefix, int shift) {
    const int n = F.order();
    JetVector pj = jet(prefix, n, 0); // jets of the prefix itself (shift 0)

    UPolynomial result;
    auto add_term = [&](const std::vector<int> &q, const PowerLogSeries &s) {
        auto it = result.find(q);
        if (it == result.end())
            result.emplace(q, s);
        else
            it->second = it->second + s;
    };

    // per jet index j and power e: (A_j + x^shift u_j)^e expanded by the
    // binomial theorem; A_j^(e-r) cached per monomial below
    for (const auto &mono : F.monomials()) {
        // start with the scalar * x^mu factor
        UPolynomial acc;
        PowerLogSeries unit(kTruncExact);
        unit.set_coeff(0, RatFunc(mono.coeff));
        acc.emplace(std::vector<int>(static_cast<size_t>(n) + 1, 0), unit.shifted_x(mono.mu));

        for (int j = 0; j <= n; ++j) {
            int e = mono.q[static_cast<size_t>(j)];
            if (e == 0)
                continue;
            // binomial factors for this jet variable
            std::vector<PowerLogSeries> apow;
            apow.reserve(static_cast<size_t>(e) + 1);
            apow.emplace_back(kTruncExact);
            apow.back().set_coeff(0, RatFunc(1L));
            for (int r = 1; r <= e; ++r)
                apow.push_back(apow.back() * pj.entries[static_cast<size_t>(j)]);

            UPolynomial next;
            for (const auto &[q, s] : acc) {
                for (int r = 0; r <= e; ++r) {
                    // C(e,r) * A_j^(e-r) * x^(shift*r) * u_j^r
                    RatFunc c(GaussianRational(Rational(binom(e, r))));
                    PowerLogSeries term =
                        apow[static_cast<size_t>(e - r)].scaled(c).shifted_x(shift * r) * s;
                    std::vector<int> nq = q;
                    nq[static_cast<size_t>(j)] += r;
                    auto it = next.find(nq);
                    if (it == next.end())
                        next.emplace(nq, term);
                    else
                        it->second = it->second + term;
                }
            }
            acc = std::move(next);
        }
        for (const auto &[q, s] : acc)
            add_term(q, s);
    }
    // drop identically-zero entries
    for (auto it = result.begin(); it != result.end();)
        it = it->second.is_zero() ? result.erase(it) : std::next(it);
    return result;
}

namespace {

int total_degree(const std::vector<int> &q) {
    int s = 0;
    for (int e : q)
        s += e;
    return s;
}

} // namespace

ReducedEquation reduce_equation(const Problem &problem, const ConditionReport &report, int ell) {
    if (!report.holds)
        throw condition_error("reduction requires a verified condition report");
    if (ell <= report.m)
        throw error("reduction requires ell > m");
    if (problem.seed_covered < ell)
        throw error("seed prefix does not cover k = 0.." + std::to_string(ell) +
                    " (use seed extension first)");

    const int n = problem.order();
    const int m = report.m;
    PowerLogSeries prefix = problem.seed_series(ell);
    UPolynomial expansion = expand_in_jets(problem.ode, prefix, ell);

    ReducedEquation red;
    red.ell = ell;
    red.n = n;
    red.m = m;
    red.an_orig = report.an();
    red.a.assign(static_cast<size_t>(n) + 1, RatFunc());

    const std::vector<int> zero_q(static_cast<size_t>(n) + 1, 0);
    for (const auto &[q, s] : expansion) {
        int deg = total_degree(q);
        auto val = s.valuation();
        if (!val)
            continue;
        if (deg == 0) {
            if (*val <= m + ell)
                throw solver_error("divisibility failure: the u-free part of the expansion has "
                                   "valuation " + std::to_string(*val) + " < " +
                                   std::to_string(m + ell + 1) +
                                   " (seed does not satisfy the equation deeply enough)");
        } else if (deg == 1) {
            if (*val < m + ell)
                throw solver_error("divisibility failure: a u-linear part has valuation " +
                                   std::to_string(*val) + " < " + std::to_string(m + ell));
        } else {
            if (*val <= m + ell)
                throw solver_error("divisibility failure: a nonlinear u-part has valuation " +
                                   std::to_string(*val) + " <= " + std::to_string(m + ell));
        }
    }

    for (const auto &[q, s] : expansion) {
        int deg = total_degree(q);
        if (deg == 1) {
            int j = 0;
            for (int idx = 0; idx <= n; ++idx)
                if (q[static_cast<size_t>(idx)] == 1)
                    j = idx;
            RatFunc aj = s.coeff(m + ell);
            red.a[static_cast<size_t>(j)] = aj / red.an_orig;
        }
        // everything above x^{m+ell} (and all u-free / nonlinear parts)
        // moves to M: b_{q,mu} = -coeff(x^{m+ell+1+mu}) / an_orig
        for (const auto &[k, r] : s.coeffs()) {
            if (deg == 1 && k == m + ell)
                continue;
            int mu = k - (m + ell + 1);
            if (mu < 0)
                throw solver_error("internal: expansion term below x^{m+ell}");
            RatFunc b = -(r / red.an_orig);
            if (b.is_zero())
                continue;
            red.monomials.push_back({q, mu, b});
        }
    }
    std::sort(red.monomials.begin(), red.monomials.end(), [](const auto &x, const auto &y) {
        return std::tie(x.mu, x.q) < std::tie(y.mu, y.q);
    });

    // consistency with the report's leading coefficients
    for (int j = 0; j <= n; ++j) {
        RatFunc expect = report.a[static_cast<size_t>(j)] / red.an_orig;
        if (red.a[static_cast<size_t>(j)] != expect)
            throw solver_error("leading coefficient mismatch between condition report and "
                               "reduction at j = " + std::to_string(j));
    }
    if (!(red.a[static_cast<size_t>(n)] == RatFunc(1L)))
        throw solver_error("internal: a_n did not normalize to 1");

    EllChoice chc = choose_ell(report);
    red.p = chc.p;
    red.Pinf = chc.Pinf;

    return red;
}

bool verify_reduction(const Problem &problem, const ReducedEquation &red) {
    PowerLogSeries prefix = problem.seed_series(red.ell);
    UPolynomial fresh = expand_in_jets(problem.ode, prefix, red.ell);

    // reconstruct: an_orig * x^{m+ell} * (sum_j a_j u_j  -  x M)
    UPolynomial rebuilt;
    const int n = red.n;
    auto put = [&](const std::vector<int> &q, int k, const RatFunc &r) {
        if (r.is_zero())
            return;
        auto it = rebuilt.find(q);
        if (it == rebuilt.end())
            it = rebuilt.emplace(q, PowerLogSeries(kTruncExact)).first;
        it->second.set_coeff(k, it->second.coeff(k) + r);
    };
    for (int j = 0; j <= n; ++j) {
        std::vector<int> q(static_cast<size_t>(n) + 1, 0);
        q[static_cast<size_t>(j)] = 1;
        put(q, red.m + red.ell, red.a[static_cast<size_t>(j)] * red.an_orig);
    }
    for (const auto &mono : red.monomials)
        put(mono.q, red.m + red.ell + 1 + mono.mu, -(mono.b * red.an_orig));

    for (auto it = rebuilt.begin(); it != rebuilt.end();)
        it = it->second.is_zero() ? rebuilt.erase(it) : std::next(it);
    for (auto it = fresh.begin(); it != fresh.end();)
        it = it->second.is_zero() ? fresh.erase(it) : std::next(it);

    if (fresh.size() != rebuilt.size())
        return false;
    for (const auto &[q, s] : fresh) {
        auto it = rebuilt.find(q);
        if (it == rebuilt.end())
            return false;
        if (!(it->second.coeffs() == s.coeffs()))
            return false;
    }
    return true;
}

} // namespace powerlog
