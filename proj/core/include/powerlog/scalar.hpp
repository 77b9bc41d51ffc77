#ifndef POWERLOG_SCALAR_HPP
#define POWERLOG_SCALAR_HPP

#include <gmpxx.h>
#include <string>

#include "powerlog/errors.hpp"

namespace powerlog {

using Integer = mpz_class;
using Rational = mpq_class; // gmp keeps these canonical: positive denominator, lowest terms

/* A Gaussian rational a + b*i with exact rational parts. This is the
 * coefficient field for every symbolic object in the engine.
 */
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}
    GaussianRational(const Rational &r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    // |z|^2, an exact rational
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational &operator+=(const GaussianRational &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational &operator*=(const GaussianRational &o) {
        Rational nre = re * o.re - im * o.im;
        Rational nim = re * o.im + im * o.re;
        re = nre;
        im = nim;
        return *this;
    }
    GaussianRational &operator/=(const GaussianRational &o) {
        if (o.is_zero())
            throw error("division by zero scalar");
        Rational n2 = o.norm2();
        Rational nre = (re * o.re + im * o.im) / n2;
        Rational nim = (im * o.re - re * o.im) / n2;
        re = nre;
        im = nim;
        return *this;
    }

    GaussianRational inverse() const {
        GaussianRational one(1);
        one /= *this;
        return one;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational &a, const GaussianRational &b) { return !(a == b); }
};

// Bit-exact textual form: "a/b" for rationals, "a/b+c/d*i" for Gaussian
// rationals with zero parts omitted; the unit imaginary prints as "i".
std::string to_string(const Rational &r);
std::string to_string(const GaussianRational &z);

// |re| + |im| >= |z|; cheap certified upper bound used for root bounds.
Rational abs1_upper(const GaussianRational &z);

/* Certified enclosure of sqrt(q) for q >= 0: lo <= sqrt(q) <= hi with
 * hi - lo <= 2^-prec_bits * max(1, hi). Exact (lo == hi) when q is the
 * square of a rational.
 */
void sqrt_bounds(const Rational &q, long prec_bits, Rational &lo, Rational &hi);

// Enclosure of the modulus |z| = sqrt(re^2 + im^2).
void abs_bounds(const GaussianRational &z, long prec_bits, Rational &lo, Rational &hi);

} // namespace powerlog

#endif
