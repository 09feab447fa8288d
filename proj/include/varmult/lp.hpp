#pragma once

#include <vector>

namespace varmult {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

// Solves min c'x subject to A x = b, x >= 0 with a two-phase tableau simplex
// (Bland's rule). A is row-major with n_rows * n_cols entries. Intended for
// small row counts; columns may number in the thousands.
LpResult solve_lp(const std::vector<double>& A, const std::vector<double>& b,
                  const std::vector<double>& c, std::size_t n_rows, std::size_t n_cols,
                  double tol = 1e-11);

} // namespace varmult
