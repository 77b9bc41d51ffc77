#include "powerlog/scalar.hpp"

namespace powerlog {

std::string to_string(const Rational &r) {
    return r.get_str();
}

std::string to_string(const GaussianRational &z) {
    if (z.is_zero())
        return "0";
    std::string out;
    if (z.re != 0)
        out += to_string(z.re);
    if (z.im != 0) {
        Rational ai = abs(z.im);
        std::string part = (ai == 1) ? "i" : to_string(ai) + "*i";
        if (out.empty())
            out = (z.im < 0 ? "-" : "") + part;
        else
            out += (z.im < 0 ? "-" : "+") + part;
    }
    return out;
}

Rational abs1_upper(const GaussianRational &z) {
    return abs(z.re) + abs(z.im);
}

void sqrt_bounds(const Rational &q, long prec_bits, Rational &lo, Rational &hi) {
    if (q < 0)
        throw error("sqrt_bounds: negative input");
    if (q == 0) {
        lo = 0;
        hi = 0;
        return;
    }
    // sqrt(a/b) = sqrt(a*b)/b; scale by 4^p so the integer sqrt carries
    // p extra bits.
    Integer a = q.get_num(), b = q.get_den();
    Integer ab = a * b;
    if (mpz_perfect_square_p(ab.get_mpz_t())) {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), ab.get_mpz_t());
        lo = Rational(s, b);
        lo.canonicalize();
        hi = lo;
        return;
    }
    Integer scaled = ab << static_cast<unsigned long>(2 * prec_bits);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t()); // floor
    Integer denom = b << static_cast<unsigned long>(prec_bits);
    lo = Rational(s, denom);
    hi = Rational(s + 1, denom);
    lo.canonicalize();
    hi.canonicalize();
}

void abs_bounds(const GaussianRational &z, long prec_bits, Rational &lo, Rational &hi) {
    if (z.im == 0) {
        lo = hi = abs(z.re);
        return;
    }
    if (z.re == 0) {
        lo = hi = abs(z.im);
        return;
    }
    sqrt_bounds(z.norm2(), prec_bits, lo, hi);
}

} // namespace powerlog
