#include "powerlog/poly.hpp"

#include <algorithm>

namespace powerlog {

Poly Poly::monomial(const GaussianRational &c, int deg) {
    Poly p;
    if (c.is_zero())
        return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, GaussianRational());
    p.c_.back() = c;
    return p;
}

const GaussianRational &Poly::leading() const {
    if (c_.empty())
        throw error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::monic() const {
    if (is_zero())
        throw error("monic() of zero polynomial");
    if (is_monic())
        return *this;
    GaussianRational inv = leading().inverse();
    return inv * (*this);
}

Poly Poly::derivative() const {
    Poly d;
    if (c_.size() <= 1)
        return d;
    d.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d.c_[i - 1] = GaussianRational(Rational(static_cast<long>(i))) * c_[i];
    d.trim();
    return d;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1L);
    Poly base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

Poly Poly::shifted(const GaussianRational &c) const {
    // Horner in (t + c)
    Poly result;
    Poly lin = Poly::variable() + Poly(c);
    for (int i = degree(); i >= 0; --i) {
        result = result * lin;
        result += Poly(c_[static_cast<size_t>(i)]);
    }
    return result;
}

GaussianRational Poly::eval(const GaussianRational &t) const {
    GaussianRational v;
    for (int i = degree(); i >= 0; --i) {
        v *= t;
        v += c_[static_cast<size_t>(i)];
    }
    return v;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto &c : r.c_)
        c = -c;
    return r;
}

Poly &Poly::operator+=(const Poly &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
    Poly r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero())
                continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly operator*(const GaussianRational &s, const Poly &p) {
    Poly r;
    if (s.is_zero() || p.is_zero())
        return r;
    r.c_ = p.c_;
    for (auto &c : r.c_)
        c *= s;
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly &a, const Poly &b) {
    if (b.is_zero())
        throw error("division by zero polynomial");
    Poly q, r = a;
    int db = b.degree();
    GaussianRational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        GaussianRational c = r.leading() * lead_inv;
        Poly term = Poly::monomial(c, shift);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

Poly Poly::divexact(const Poly &a, const Poly &b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw error("divexact: inexact polynomial division");
    return q;
}

Poly poly_gcd(const Poly &a, const Poly &b) {
    if (a.is_zero() && b.is_zero())
        throw error("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        // monic normalization keeps coefficient growth in check
        y = y.monic();
        Poly r = Poly::divrem(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly poly_lcm(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    return Poly::divexact(a * b, poly_gcd(a, b)).monic();
}

Poly squarefree_part(const Poly &p) {
    if (p.is_zero())
        throw error("squarefree part of zero polynomial");
    if (p.degree() == 0)
        return Poly(1L);
    Poly g = poly_gcd(p, p.derivative());
    return Poly::divexact(p.monic(), g).monic();
}

int max_root_multiplicity(const Poly &p) {
    if (p.is_zero())
        throw error("multiplicity of zero polynomial");
    Poly g = p.monic();
    int mult = 0;
    while (g.degree() > 0) {
        g = poly_gcd(g, g.derivative());
        ++mult;
    }
    return mult;
}

Rational cauchy_root_bound(const Poly &p) {
    if (p.degree() <= 0)
        return Rational(0);
    // |root| <= 1 + max |c_i| / |c_d|; |c_i| <= |re|+|im| and
    // |c_d| >= max(|re|, |im|) give a certified rational version.
    const GaussianRational &lead = p.leading();
    Rational lead_lo = std::max(abs(lead.re), abs(lead.im));
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational u = abs1_upper(p.coeff(i)) / lead_lo;
        if (u > m)
            m = u;
    }
    return Rational(1) + m;
}

std::vector<Integer> integer_roots(const Poly &p) {
    if (p.is_zero())
        throw error("integer roots of zero polynomial");
    std::vector<Integer> roots;
    if (p.degree() == 0)
        return roots;
    Rational bound = cauchy_root_bound(p);
    Integer b = bound.get_num() / bound.get_den() + 1;
    for (Integer k = -b; k <= b; ++k) {
        GaussianRational v = p.eval(GaussianRational(Rational(k)));
        if (v.is_zero())
            roots.push_back(k);
    }
    return roots;
}

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        const GaussianRational &c = c_[i];
        if (c.is_zero())
            continue;
        std::string term;
        bool both = (c.re != 0 && c.im != 0);
        std::string cs = powerlog::to_string(c);
        if (i == 0) {
            term = both ? "(" + cs + ")" : cs;
        } else {
            std::string var = (i == 1) ? "t" : "t^" + std::to_string(i);
            if (both)
                term = "(" + cs + ")*" + var;
            else if (c.is_one())
                term = var;
            else if (c == GaussianRational(-1L))
                term = "-" + var;
            else if (cs == "i")
                term = "i*" + var;
            else if (cs == "-i")
                term = "-i*" + var;
            else
                term = cs + "*" + var;
        }
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
