#include "powerlog/series.hpp"

#include <algorithm>

namespace powerlog {

namespace {
int sat_add(int a, int b) {
    if (a >= kTruncExact || b >= kTruncExact)
        return kTruncExact;
    long s = static_cast<long>(a) + b;
    return s >= kTruncExact ? kTruncExact : static_cast<int>(s);
}
} // namespace

void PowerLogSeries::set_coeff(int k, const RatFunc &r) {
    if (k < 0)
        throw error("negative series exponent");
    if (r.is_zero()) {
        c_.erase(k);
        return;
    }
    if (k > trunc_)
        throw error("series exponent above truncation order");
    c_[k] = r;
}

PowerLogSeries PowerLogSeries::truncated(int new_trunc) const {
    PowerLogSeries out(new_trunc);
    for (const auto &[k, r] : c_) {
        if (k > new_trunc)
            break;
        out.c_.emplace(k, r);
    }
    return out;
}

PowerLogSeries PowerLogSeries::operator-() const {
    PowerLogSeries out(trunc_);
    for (const auto &[k, r] : c_)
        out.c_.emplace(k, -r);
    return out;
}

PowerLogSeries operator+(const PowerLogSeries &a, const PowerLogSeries &b) {
    PowerLogSeries out(std::min(a.trunc_, b.trunc_));
    for (const auto &[k, r] : a.c_) {
        if (k > out.trunc_)
            break;
        out.c_.emplace(k, r);
    }
    for (const auto &[k, r] : b.c_) {
        if (k > out.trunc_)
            break;
        auto [it, fresh] = out.c_.emplace(k, r);
        if (!fresh) {
            it->second += r;
            if (it->second.is_zero())
                out.c_.erase(it);
        }
    }
    return out;
}

PowerLogSeries operator-(const PowerLogSeries &a, const PowerLogSeries &b) { return a + (-b); }

PowerLogSeries operator*(const PowerLogSeries &a, const PowerLogSeries &b) {
    // pessimistic truncation: product of series truncated at N stays at N
    PowerLogSeries out(std::min(a.trunc_, b.trunc_));
    for (const auto &[ka, ra] : a.c_) {
        if (ka > out.trunc_)
            break;
        for (const auto &[kb, rb] : b.c_) {
            int k = sat_add(ka, kb);
            if (k > out.trunc_)
                break;
            RatFunc prod = ra * rb;
            auto [it, fresh] = out.c_.emplace(k, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second.is_zero())
                    out.c_.erase(it);
            }
        }
    }
    return out;
}

PowerLogSeries PowerLogSeries::scaled(const RatFunc &r) const {
    PowerLogSeries out(trunc_);
    if (r.is_zero())
        return out;
    for (const auto &[k, c] : c_)
        out.c_.emplace(k, c * r);
    return out;
}

PowerLogSeries PowerLogSeries::shifted_x(int mu) const {
    PowerLogSeries out(sat_add(trunc_, mu));
    for (const auto &[k, c] : c_)
        out.c_.emplace(sat_add(k, mu), c);
    return out;
}

PowerLogSeries PowerLogSeries::pow(unsigned e) const {
    PowerLogSeries result(kTruncExact);
    result.set_coeff(0, RatFunc(1L));
    PowerLogSeries base = *this;
    unsigned exp = e;
    while (exp) {
        if (exp & 1u)
            result = result * base;
        base = (exp >>= 1u) ? base * base : base;
    }
    return result;
}

PowerLogSeries delta(const PowerLogSeries &s, int shift) {
    PowerLogSeries out(s.trunc());
    for (const auto &[k, r] : s.coeffs()) {
        RatFunc d = r.derivative() + RatFunc(GaussianRational(Rational(shift + k))) * r;
        if (!d.is_zero())
            out.set_coeff(k, d);
    }
    return out;
}

JetVector jet(const PowerLogSeries &s, int n, int shift) {
    if (n < 0)
        throw error("jet order must be nonnegative");
    JetVector jv;
    jv.entries.reserve(static_cast<size_t>(n) + 1);
    jv.entries.push_back(s);
    for (int j = 1; j <= n; ++j)
        jv.entries.push_back(delta(jv.entries.back(), shift));
    return jv;
}

PowerLogSeries substitute(const AlgebraicODE &F, const JetVector &jets) {
    if (jets.order() < F.order())
        throw error("jet vector shorter than the equation order");
    int trunc = kTruncExact;
    for (const auto &e : jets.entries)
        trunc = std::min(trunc, e.trunc());
    PowerLogSeries acc(trunc);
    for (const auto &m : F.monomials()) {
        PowerLogSeries term(kTruncExact);
        term.set_coeff(0, RatFunc(m.coeff));
        for (size_t j = 0; j < m.q.size(); ++j) {
            if (m.q[j] == 0)
                continue;
            term = term * jets.entries[j].pow(static_cast<unsigned>(m.q[j]));
        }
        acc = acc + term.shifted_x(m.mu);
    }
    return acc;
}

PowerLogSeries partial_series(const AlgebraicODE &F, int j, const JetVector &jets) {
    return substitute(F.partial(j), jets);
}

} // namespace powerlog
