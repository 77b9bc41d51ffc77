#ifndef POWERLOG_SERIES_HPP
#define POWERLOG_SERIES_HPP

#include <limits>
#include <map>
#include <optional>

#include "powerlog/ode.hpp"
#include "powerlog/ratfunc.hpp"

namespace powerlog {

// Truncation marker for series that are exact at every order (finite
// x-polynomials such as seed prefixes).
inline constexpr int kTruncExact = std::numeric_limits<int>::max() / 2;

/* Truncated power-log series sum_{k <= trunc} R_k(ln x) x^k with
 * RatFunc coefficients, exact modulo x^{trunc+1}. Zero coefficients are
 * never stored, so the valuation is a lookup.
 */
class PowerLogSeries {
  public:
    explicit PowerLogSeries(int trunc = kTruncExact) : trunc_(trunc) {
        if (trunc < 0)
            throw error("negative truncation order");
    }

    int trunc() const { return trunc_; }
    const std::map<int, RatFunc> &coeffs() const { return c_; }

    RatFunc coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? RatFunc() : it->second;
    }
    void set_coeff(int k, const RatFunc &r);

    bool is_zero() const { return c_.empty(); }
    // smallest stored exponent, or nullopt when all-zero up to trunc
    std::optional<int> valuation() const {
        if (c_.empty())
            return std::nullopt;
        return c_.begin()->first;
    }

    PowerLogSeries truncated(int new_trunc) const;

    PowerLogSeries operator-() const;
    friend PowerLogSeries operator+(const PowerLogSeries &a, const PowerLogSeries &b);
    friend PowerLogSeries operator-(const PowerLogSeries &a, const PowerLogSeries &b);
    friend PowerLogSeries operator*(const PowerLogSeries &a, const PowerLogSeries &b);
    friend bool operator==(const PowerLogSeries &a, const PowerLogSeries &b) {
        return a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }

    PowerLogSeries scaled(const RatFunc &r) const;
    // multiplication by x^mu: exponents shift, certainty extends by mu
    PowerLogSeries shifted_x(int mu) const;
    PowerLogSeries pow(unsigned e) const;

  private:
    int trunc_;
    std::map<int, RatFunc> c_;
};

/* delta with shift: coefficient at x^k maps to (shift + k + d/dt) R_k.
 * shift = 0 is the Euler operator x d/dx itself.
 */
PowerLogSeries delta(const PowerLogSeries &s, int shift = 0);

struct JetVector {
    std::vector<PowerLogSeries> entries; // entry j = (delta+shift)^j s

    int order() const { return static_cast<int>(entries.size()) - 1; }
    const PowerLogSeries &operator[](size_t j) const { return entries[j]; }
};

JetVector jet(const PowerLogSeries &s, int n, int shift = 0);

// F evaluated on the jets, exact modulo x^{trunc+1} of the jet entries.
PowerLogSeries substitute(const AlgebraicODE &F, const JetVector &jets);

// dF/dy_j evaluated on the jets
PowerLogSeries partial_series(const AlgebraicODE &F, int j, const JetVector &jets);

} // namespace powerlog

#endif
