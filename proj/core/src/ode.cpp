#include "powerlog/ode.hpp"

#include <algorithm>
#include <map>

namespace powerlog {

AlgebraicODE AlgebraicODE::from_monomials(int n, std::vector<OdeMonomial> monos,
                                          bool require_unknown) {
    if (n < 0)
        throw error("ODE order must be nonnegative");
    std::map<std::pair<int, std::vector<int>>, GaussianRational> merged;
    for (auto &m : monos) {
        if (m.coeff.is_zero())
            continue;
        if (m.mu < 0)
            throw error("negative x-exponent in ODE monomial");
        std::vector<int> q = m.q;
        for (int e : q)
            if (e < 0)
                throw error("negative y-exponent in ODE monomial");
        if (static_cast<int>(q.size()) > n + 1) {
            for (size_t j = static_cast<size_t>(n) + 1; j < q.size(); ++j)
                if (q[j] != 0)
                    throw error("monomial involves y-index above the declared order");
            q.resize(static_cast<size_t>(n) + 1);
        } else {
            q.resize(static_cast<size_t>(n) + 1, 0);
        }
        merged[{m.mu, q}] += m.coeff;
    }
    AlgebraicODE ode;
    ode.n_ = n;
    bool has_y = false;
    for (auto &[key, c] : merged) {
        if (c.is_zero())
            continue;
        for (int e : key.second)
            if (e > 0)
                has_y = true;
        ode.monos_.push_back({c, key.first, key.second});
    }
    if (require_unknown && !has_y)
        throw error("equation does not involve the unknown");
    return ode;
}

AlgebraicODE AlgebraicODE::partial(int j) const {
    if (j < 0 || j > n_)
        throw error("partial derivative index out of range");
    std::vector<OdeMonomial> out;
    for (const auto &m : monos_) {
        int e = m.q[static_cast<size_t>(j)];
        if (e == 0)
            continue;
        OdeMonomial d = m;
        d.coeff *= GaussianRational(Rational(e));
        d.q[static_cast<size_t>(j)] = e - 1;
        out.push_back(std::move(d));
    }
    return from_monomials(n_, std::move(out));
}

int AlgebraicODE::total_x_degree() const {
    int d = 0;
    for (const auto &m : monos_)
        d = std::max(d, m.mu);
    return d;
}

int AlgebraicODE::total_y_degree() const {
    int d = 0;
    for (const auto &m : monos_) {
        int s = 0;
        for (int e : m.q)
            s += e;
        d = std::max(d, s);
    }
    return d;
}

bool operator==(const AlgebraicODE &a, const AlgebraicODE &b) {
    return a.n_ == b.n_ && [&] {
        if (a.monos_.size() != b.monos_.size())
            return false;
        for (size_t i = 0; i < a.monos_.size(); ++i) {
            const auto &x = a.monos_[i];
            const auto &y = b.monos_[i];
            if (x.mu != y.mu || x.q != y.q || !(x.coeff == y.coeff))
                return false;
        }
        return true;
    }();
}

std::string AlgebraicODE::to_string() const {
    if (monos_.empty())
        return "0";
    std::string out;
    for (const auto &m : monos_) {
        std::string term;
        bool both = (m.coeff.re != 0 && m.coeff.im != 0);
        std::string cs = powerlog::to_string(m.coeff);
        std::vector<std::string> parts;
        bool coeff_printed = false;
        if (both) {
            parts.push_back("(" + cs + ")");
            coeff_printed = true;
        } else if (!m.coeff.is_one() && m.coeff != GaussianRational(-1L)) {
            parts.push_back(cs);
            coeff_printed = true;
        }
        if (m.mu > 0)
            parts.push_back(m.mu == 1 ? "x" : "x^" + std::to_string(m.mu));
        for (size_t j = 0; j < m.q.size(); ++j) {
            if (m.q[j] == 0)
                continue;
            std::string v = "y" + std::to_string(j);
            parts.push_back(m.q[j] == 1 ? v : v + "^" + std::to_string(m.q[j]));
        }
        if (parts.empty()) {
            parts.push_back(cs); // pure constant
            coeff_printed = true;
        }
        term = parts[0];
        for (size_t i = 1; i < parts.size(); ++i)
            term += "*" + parts[i];
        if (!coeff_printed && m.coeff == GaussianRational(-1L))
            term = "-" + term;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

} // namespace powerlog
