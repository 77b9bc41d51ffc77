#ifndef POWERLOG_PROBLEM_HPP
#define POWERLOG_PROBLEM_HPP

#include <string>
#include <utility>
#include <vector>

#include "powerlog/ode.hpp"
#include "powerlog/ratfunc.hpp"
#include "powerlog/series.hpp"

namespace powerlog {

struct SectorSpec {
    double radius = 0.1;
    double opening_deg = 90.0;
    double bisector_deg = 0.0;
    int samples = 5;

    // opening in (0, 360), branch cut at arg = +-180 deg avoided
    void validate() const;
};

struct ProblemOptions {
    int expand_to = 8;
    int check_depth = -1; // -1: default 2*order + 4
    long precision_bits = 128;
    SectorSpec sector;
};

/* A problem instance: the equation, a seed prefix of a formal solution
 * (the theorem's premise, not something we derive), and run options.
 */
struct Problem {
    AlgebraicODE ode;
    std::vector<std::pair<int, RatFunc>> seed; // sorted by k, distinct, nonzero entries
    // coefficients are known for every k <= seed_covered (absent = zero);
    // beyond that they must be computed by seed extension
    int seed_covered = -1;
    ProblemOptions options;

    int order() const { return ode.order(); }
    int depth() const { return options.check_depth >= 0 ? options.check_depth : 2 * order() + 4; }
    int seed_length() const { return seed.empty() ? -1 : seed.back().first; }

    // seed as an exact power-log polynomial, cut at k <= upto
    PowerLogSeries seed_series(int upto) const;
};

Problem load_problem(const std::string &path);
Problem problem_from_json_text(const std::string &text, const std::string &origin = "<memory>");

} // namespace powerlog

#endif
