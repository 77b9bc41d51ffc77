#include "powerlog/linsolve.hpp"

#include <algorithm>

namespace powerlog {

LinearSolution solve_linear_system(const GMatrix &A, const GVector &b) {
    size_t rows = A.size();
    if (rows != b.size())
        throw error("solve_linear_system: dimension mismatch");
    size_t cols = rows ? A[0].size() : 0;
    for (const auto &row : A)
        if (row.size() != cols)
            throw error("solve_linear_system: ragged matrix");

    GMatrix m = A;
    GVector rhs = b;

    std::vector<long> pivot_col_of_row(rows, -1);
    std::vector<long> pivot_row_of_col(cols, -1);

    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        // candidate rows with a nonzero entry in this column
        size_t best = rows;
        size_t best_nnz = SIZE_MAX;
        for (size_t r = rank; r < rows; ++r) {
            if (m[r][col].is_zero())
                continue;
            size_t nnz = 0;
            for (size_t c = col; c < cols; ++c)
                if (!m[r][c].is_zero())
                    ++nnz;
            if (nnz < best_nnz) {
                best_nnz = nnz;
                best = r;
            }
        }
        if (best == rows)
            continue;
        std::swap(m[rank], m[best]);
        std::swap(rhs[rank], rhs[best]);

        GaussianRational inv = m[rank][col].inverse();
        for (size_t c = col; c < cols; ++c)
            m[rank][c] *= inv;
        rhs[rank] *= inv;

        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero())
                continue;
            GaussianRational f = m[r][col];
            for (size_t c = col; c < cols; ++c)
                m[r][c] -= f * m[rank][c];
            rhs[r] -= f * rhs[rank];
        }
        pivot_col_of_row[rank] = static_cast<long>(col);
        pivot_row_of_col[col] = static_cast<long>(rank);
        ++rank;
    }

    LinearSolution sol;
    for (size_t r = rank; r < rows; ++r)
        if (!rhs[r].is_zero())
            return sol; // inconsistent
    sol.consistent = true;

    sol.particular.assign(cols, GaussianRational());
    for (size_t r = 0; r < rank; ++r)
        sol.particular[static_cast<size_t>(pivot_col_of_row[r])] = rhs[r];

    for (size_t col = 0; col < cols; ++col) {
        if (pivot_row_of_col[col] >= 0)
            continue;
        GVector v(cols, GaussianRational());
        v[col] = GaussianRational(1);
        for (size_t r = 0; r < rank; ++r) {
            size_t pc = static_cast<size_t>(pivot_col_of_row[r]);
            v[pc] = -m[r][col];
        }
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

} // namespace powerlog
