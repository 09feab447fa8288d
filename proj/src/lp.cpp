#include "varmult/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace varmult {

namespace {

// Tableau layout: rows 0..m-1 hold the constraints, row m holds the reduced
// costs; column layout is [structural | artificial | rhs].
struct Tableau {
    std::size_t m, n;  // constraint rows, total variable columns
    std::vector<double> t;
    std::vector<std::size_t> basis;

    double& at(std::size_t r, std::size_t c) { return t[r * (n + 1) + c]; }
    double at(std::size_t r, std::size_t c) const { return t[r * (n + 1) + c]; }
    double& rhs(std::size_t r) { return t[r * (n + 1) + n]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double piv = at(pr, pc);
        const double inv = 1.0 / piv;
        for (std::size_t c = 0; c <= n; ++c) at(pr, c) *= inv;
        at(pr, pc) = 1.0;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == pr) continue;
            const double f = at(r, pc);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c <= n; ++c) at(r, c) -= f * at(pr, c);
            at(r, pc) = 0.0;
        }
        basis[pr] = pc;
    }

    // Runs simplex on the current cost row restricted to columns < n_active.
    // Bland's rule keeps it finite.
    bool iterate(std::size_t n_active, double tol, std::size_t max_iter) {
        for (std::size_t iter = 0; iter < max_iter; ++iter) {
            std::size_t pc = n_active;
            for (std::size_t c = 0; c < n_active; ++c) {
                if (at(m, c) < -tol) {
                    pc = c;
                    break;
                }
            }
            if (pc == n_active) return true;  // optimal
            std::size_t pr = m;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m; ++r) {
                double a = at(r, pc);
                if (a > tol) {
                    double ratio = rhs(r) / a;
                    if (ratio < best_ratio - tol ||
                        (ratio < best_ratio + tol && (pr == m || basis[r] < basis[pr]))) {
                        best_ratio = ratio;
                        pr = r;
                    }
                }
            }
            if (pr == m) return false;  // unbounded
            pivot(pr, pc);
        }
        throw std::runtime_error("solve_lp: iteration limit reached");
    }
};

} // namespace

LpResult solve_lp(const std::vector<double>& A, const std::vector<double>& b,
                  const std::vector<double>& c, std::size_t n_rows, std::size_t n_cols,
                  double tol) {
    if (A.size() != n_rows * n_cols || b.size() != n_rows || c.size() != n_cols)
        throw std::invalid_argument("solve_lp: inconsistent dimensions");

    Tableau tab;
    tab.m = n_rows;
    tab.n = n_cols + n_rows;  // structural + one artificial per row
    tab.t.assign((tab.m + 1) * (tab.n + 1), 0.0);
    tab.basis.resize(tab.m);

    for (std::size_t r = 0; r < n_rows; ++r) {
        const double sign = b[r] < 0.0 ? -1.0 : 1.0;
        for (std::size_t cix = 0; cix < n_cols; ++cix) tab.at(r, cix) = sign * A[r * n_cols + cix];
        tab.at(r, n_cols + r) = 1.0;
        tab.rhs(r) = sign * b[r];
        tab.basis[r] = n_cols + r;
    }
    // Phase 1 cost: sum of artificials, expressed in reduced form.
    for (std::size_t cix = 0; cix < n_cols; ++cix) {
        double s = 0.0;
        for (std::size_t r = 0; r < n_rows; ++r) s += tab.at(r, cix);
        tab.at(tab.m, cix) = -s;
    }
    {
        double s = 0.0;
        for (std::size_t r = 0; r < n_rows; ++r) s += tab.rhs(r);
        tab.rhs(tab.m) = -s;
    }
    if (!tab.iterate(tab.n, tol, 50000)) throw std::runtime_error("solve_lp: phase 1 unbounded");

    LpResult res;
    if (std::abs(tab.rhs(tab.m)) > 1e-8) {
        res.status = LpStatus::infeasible;
        return res;
    }
    // Drive any residual artificial out of the basis if possible.
    for (std::size_t r = 0; r < tab.m; ++r) {
        if (tab.basis[r] >= n_cols) {
            std::size_t pc = n_cols;
            for (std::size_t cix = 0; cix < n_cols; ++cix) {
                if (std::abs(tab.at(r, cix)) > 1e-9) {
                    pc = cix;
                    break;
                }
            }
            if (pc < n_cols) tab.pivot(r, pc);
        }
    }
    // Phase 2 cost row, reduced against the current basis.
    for (std::size_t cix = 0; cix <= tab.n; ++cix) tab.at(tab.m, cix) = 0.0;
    for (std::size_t cix = 0; cix < n_cols; ++cix) tab.at(tab.m, cix) = c[cix];
    for (std::size_t r = 0; r < tab.m; ++r) {
        std::size_t bc = tab.basis[r];
        if (bc >= n_cols) continue;  // degenerate artificial stuck in basis, row is all-zero
        const double f = tab.at(tab.m, bc);
        if (f == 0.0) continue;
        for (std::size_t cix = 0; cix <= tab.n; ++cix) tab.at(tab.m, cix) -= f * tab.at(r, cix);
    }
    if (!tab.iterate(n_cols, tol, 50000)) {
        res.status = LpStatus::unbounded;
        return res;
    }

    res.status = LpStatus::optimal;
    res.x.assign(n_cols, 0.0);
    for (std::size_t r = 0; r < tab.m; ++r)
        if (tab.basis[r] < n_cols) res.x[tab.basis[r]] = tab.rhs(r);
    double obj = 0.0;
    for (std::size_t cix = 0; cix < n_cols; ++cix) obj += c[cix] * res.x[cix];
    res.objective = obj;
    return res;
}

} // namespace varmult
