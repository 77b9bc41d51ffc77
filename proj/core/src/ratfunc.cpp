#include "powerlog/ratfunc.hpp"

namespace powerlog {

void RatFunc::normalize(Poly num, Poly den) {
    if (den.is_zero())
        throw error("division by zero polynomial");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1L);
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = Poly::divexact(num, g);
        den = Poly::divexact(den, g);
    }
    GaussianRational inv = den.leading().inverse();
    num_ = inv * num;
    den_ = inv * den;
}

int RatFunc::ord_at_infinity() const {
    if (is_zero())
        throw error("order at infinity of the zero function");
    return den_.degree() - num_.degree();
}

RatFunc RatFunc::derivative() const {
    if (is_polynomial())
        return RatFunc(num_.derivative());
    Poly n = num_.derivative() * den_ - num_ * den_.derivative();
    return RatFunc(n, den_ * den_);
}

GaussianRational RatFunc::eval(const GaussianRational &t) const {
    GaussianRational d = den_.eval(t);
    if (d.is_zero())
        throw error("rational function evaluated at a pole");
    return num_.eval(t) / d;
}

RatFunc RatFunc::pow(unsigned e) const {
    RatFunc r(1L);
    RatFunc base = *this;
    while (e) {
        if (e & 1u)
            r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc &RatFunc::operator+=(const RatFunc &o) {
    normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc &RatFunc::operator-=(const RatFunc &o) {
    normalize(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc &RatFunc::operator*=(const RatFunc &o) {
    normalize(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc &RatFunc::operator/=(const RatFunc &o) {
    if (o.is_zero())
        throw error("division by zero rational function");
    normalize(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::string RatFunc::to_string() const {
    if (is_polynomial())
        return num_.to_string();
    auto wrap = [](const Poly &p) {
        std::string s = p.to_string();
        int terms = 0;
        for (const auto &c : p.coeffs())
            if (!c.is_zero())
                ++terms;
        bool multi = terms > 1;
        return multi ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::vector<std::pair<int, GaussianRational>> laurent_at_infinity(const RatFunc &f, int terms) {
    if (f.is_zero())
        throw error("laurent expansion of the zero function");
    if (terms < 1)
        throw error("laurent_at_infinity: need at least one term");
    const Poly &num = f.num();
    const Poly &den = f.den();
    int dn = num.degree(), dd = den.degree();
    // reversed coefficient sequences: series in s = 1/t
    auto rev = [](const Poly &p, int d) {
        std::vector<GaussianRational> v(static_cast<size_t>(d) + 1);
        for (int j = 0; j <= d; ++j)
            v[static_cast<size_t>(j)] = p.coeff(d - j);
        return v;
    };
    std::vector<GaussianRational> nr = rev(num, dn), dr = rev(den, dd);
    // power-series division nr/dr (dr[0] != 0 since den has a nonzero lead)
    GaussianRational d0inv = dr[0].inverse();
    std::vector<GaussianRational> g(static_cast<size_t>(terms));
    for (int j = 0; j < terms; ++j) {
        GaussianRational acc = (j <= dn) ? nr[static_cast<size_t>(j)] : GaussianRational();
        for (int u = 0; u < j; ++u) {
            int v = j - u;
            if (v <= dd)
                acc -= g[static_cast<size_t>(u)] * dr[static_cast<size_t>(v)];
        }
        g[static_cast<size_t>(j)] = acc * d0inv;
    }
    int p = dd - dn;
    std::vector<std::pair<int, GaussianRational>> out;
    out.reserve(static_cast<size_t>(terms));
    for (int j = 0; j < terms; ++j)
        out.emplace_back(p + j, g[static_cast<size_t>(j)]);
    return out;
}

} // namespace powerlog
