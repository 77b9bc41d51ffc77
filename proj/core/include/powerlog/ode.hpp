#ifndef POWERLOG_ODE_HPP
#define POWERLOG_ODE_HPP

#include <vector>

#include "powerlog/scalar.hpp"

namespace powerlog {

/* One monomial coeff * x^mu * y0^q[0] * ... * yn^q[n] of an algebraic
 * ODE F(x, y, dy, ..., d^n y) = 0 written in Euler-jet variables.
 */
struct OdeMonomial {
    GaussianRational coeff;
    int mu = 0;
    std::vector<int> q; // exponents of y0..yn, size n+1
};

class AlgebraicODE {
  public:
    AlgebraicODE() = default;

    // Merges duplicate (mu, q) keys, drops zero coefficients, pads q to
    // n+1 entries and sorts canonically by (mu, q lexicographic).
    // When require_unknown is set, errors unless some monomial actually
    // involves a y-variable.
    static AlgebraicODE from_monomials(int n, std::vector<OdeMonomial> monos,
                                       bool require_unknown = false);

    int order() const { return n_; }
    const std::vector<OdeMonomial> &monomials() const { return monos_; }

    // symbolic partial derivative with respect to y_j
    AlgebraicODE partial(int j) const;

    int total_x_degree() const;
    int total_y_degree() const;

    std::string to_string() const; // canonical printing

    friend bool operator==(const AlgebraicODE &a, const AlgebraicODE &b);

  private:
    int n_ = 0;
    std::vector<OdeMonomial> monos_;
};

} // namespace powerlog

#endif
