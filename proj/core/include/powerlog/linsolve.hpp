#ifndef POWERLOG_LINSOLVE_HPP
#define POWERLOG_LINSOLVE_HPP

#include <vector>

#include "powerlog/scalar.hpp"

namespace powerlog {

using GVector = std::vector<GaussianRational>;
using GMatrix = std::vector<GVector>;

struct LinearSolution {
    bool consistent = false;
    GVector particular;          // one solution (free unknowns set to 0)
    std::vector<GVector> kernel; // basis of the homogeneous solution space

    bool unique() const { return consistent && kernel.empty(); }
};

/* Exact Gaussian elimination verdict for A x = b over the Gaussian
 * rationals. Within each column the pivot row is chosen to preserve
 * sparsity; any nonzero pivot is exact, so this is a heuristic only and
 * the backend can be swapped.
 */
LinearSolution solve_linear_system(const GMatrix &A, const GVector &b);

} // namespace powerlog

#endif
