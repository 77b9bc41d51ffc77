#ifndef POWERLOG_RATFUNC_HPP
#define POWERLOG_RATFUNC_HPP

#include <optional>

#include "powerlog/poly.hpp"

namespace powerlog {

/* Reduced rational function in t: gcd(num, den) = 1, den monic and
 * nonzero. The canonical form is unique, so equality is coefficient-wise.
 */
class RatFunc {
  public:
    RatFunc() : den_(1L) {}
    RatFunc(const Poly &num) : num_(num), den_(1L) {}
    RatFunc(long c) : num_(Poly(c)), den_(1L) {}
    RatFunc(const GaussianRational &c) : num_(Poly(c)), den_(1L) {}
    RatFunc(const Poly &num, const Poly &den) { normalize(num, den); }

    const Poly &num() const { return num_; }
    const Poly &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    // order at infinity: f = sum_{i >= p} f_i t^-i with p = deg den - deg num.
    // Undefined (throws) for the zero function.
    int ord_at_infinity() const;

    RatFunc derivative() const;
    GaussianRational eval(const GaussianRational &t) const; // throws at poles
    RatFunc pow(unsigned e) const;

    RatFunc operator-() const;
    RatFunc &operator+=(const RatFunc &o);
    RatFunc &operator-=(const RatFunc &o);
    RatFunc &operator*=(const RatFunc &o);
    RatFunc &operator/=(const RatFunc &o);
    friend RatFunc operator+(RatFunc a, const RatFunc &b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc &b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc &b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc &b) { return a /= b; }
    friend bool operator==(const RatFunc &a, const RatFunc &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

    std::string to_string() const;

  private:
    void normalize(Poly num, Poly den);
    Poly num_;
    Poly den_;
};

inline RatFunc ratfunc_normalize(const Poly &num, const Poly &den) { return RatFunc(num, den); }

/* First `terms` coefficients of the Laurent expansion at infinity,
 * f(t) = sum_{i >= p} f_i t^-i, returned as (i, f_i) pairs starting at
 * i = p (consecutive; zero coefficients after the first are included).
 */
std::vector<std::pair<int, GaussianRational>> laurent_at_infinity(const RatFunc &f, int terms);

} // namespace powerlog

#endif
