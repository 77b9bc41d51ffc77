#ifndef POWERLOG_ERRORS_HPP
#define POWERLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace powerlog {

/* Error hierarchy. The CLI maps these to exit codes: usage/IO and parse
 * problems -> 1, condition failures -> 2, solver failures -> 3.
 */
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    int line;
    int col;
    parse_error(const std::string &msg, int line_, int col_)
        : error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

// Theorem hypothesis cannot be established (or is indeterminate at the
// requested depth).
struct condition_error : error {
    using error::error;
};

// No rational coefficient could be found within the adaptive bounds.
struct solver_error : error {
    int failing_k = -1;
    explicit solver_error(const std::string &msg, int k = -1) : error(msg), failing_k(k) {}
};

// Weighted-norm machinery preconditions (pole modulus vs r, etc.).
struct norm_error : error {
    using error::error;
};

// Numeric evaluation problems (log-pole proximity, x = 0, bad sector).
struct eval_error : error {
    using error::error;
};

} // namespace powerlog

#endif
