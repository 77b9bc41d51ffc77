#ifndef POWERLOG_POLY_HPP
#define POWERLOG_POLY_HPP

#include <utility>
#include <vector>

#include "powerlog/scalar.hpp"

namespace powerlog {

/* Dense univariate polynomial in t over the Gaussian rationals. The
 * coefficient vector never has trailing zeros; the zero polynomial is
 * the empty vector and reports degree() == -1.
 */
class Poly {
  public:
    Poly() = default;
    Poly(const GaussianRational &c) {
        if (!c.is_zero())
            c_.push_back(c);
    }
    Poly(long c) : Poly(GaussianRational(c)) {}
    explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(GaussianRational(1), 1); }
    static Poly monomial(const GaussianRational &c, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    const GaussianRational &leading() const;
    GaussianRational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return GaussianRational();
        return c_[i];
    }
    const std::vector<GaussianRational> &coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    Poly monic() const;

    Poly derivative() const;
    Poly pow(unsigned e) const;
    // coefficient-wise substitution t -> t + c (used for local expansions)
    Poly shifted(const GaussianRational &c) const;
    GaussianRational eval(const GaussianRational &t) const;

    Poly operator-() const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(const GaussianRational &s, const Poly &p);
    friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    // quotient and remainder; divisor must be nonzero
    static std::pair<Poly, Poly> divrem(const Poly &a, const Poly &b);
    // exact division; throws if the remainder is nonzero
    static Poly divexact(const Poly &a, const Poly &b);

    std::string to_string() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

// Monic gcd; errors if both arguments are zero.
Poly poly_gcd(const Poly &a, const Poly &b);
Poly poly_lcm(const Poly &a, const Poly &b);

// Monic product of the distinct irreducible factors of p (p != 0).
Poly squarefree_part(const Poly &p);

// Largest multiplicity of any root of p (0 for constants), via Yun-style
// repeated gcd with the derivative. No factorization into irreducibles.
int max_root_multiplicity(const Poly &p);

// All integer roots, found by testing integers within the Cauchy bound
// 1 + max_i |c_i / c_deg|.
std::vector<Integer> integer_roots(const Poly &p);

// Rational upper bound B with |root| <= B for every complex root of p
// (deg p >= 1). Returns 0 for constants.
Rational cauchy_root_bound(const Poly &p);

} // namespace powerlog

#endif
