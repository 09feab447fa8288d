#pragma once

#include "varmult/opfamily.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace varmult {

// Doubly-indexed test configuration for the mixed l^r(l^s) inequality:
// selection[j][k] indexes the family, inputs[j][k] is a vector in C^dim.
struct LrsWitness {
    std::size_t rows = 0;  // outer index j (l^r layer)
    std::size_t cols = 0;  // inner index k (l^s layer)
    std::vector<std::size_t> selection;  // rows*cols, row-major
    std::vector<Vector> inputs;          // rows*cols, row-major
    double lhs = 0.0;
    double rhs = 0.0;

    std::size_t& sel(std::size_t j, std::size_t k) { return selection[j * cols + k]; }
    std::size_t sel(std::size_t j, std::size_t k) const { return selection[j * cols + k]; }
    Vector& in(std::size_t j, std::size_t k) { return inputs[j * cols + k]; }
    const Vector& in(std::size_t j, std::size_t k) const { return inputs[j * cols + k]; }
};

struct LrsPair {
    double lhs = 0.0;
    double rhs = 0.0;
};

// Both sides of the defining inequality: componentwise moduli, inner l^s over
// k, outer l^r over j, then the base-space norms. Exponent infinity is a max;
// r == s collapses to a single flattened l^s sum.
LrsPair eval_lrs(const OperatorFamily& family, const LrsWitness& witness, Exponent r, Exponent s);

struct LrsEstimate {
    double bound = 0.0;  // best observed lhs/rhs (a lower bound for the true constant)
    LrsWitness witness;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
};

// Seeded lower-bound search: structured candidates (coordinate inputs, dyadic
// indicator patterns, cycling selections) plus random restarts, each refined
// by 200 steps of normalized coordinate ascent. Grid sizes swept over
// {1,2,4,8}^2. Deterministic given the seed.
LrsEstimate estimate_lrs_bound(const OperatorFamily& family, Exponent r, Exponent s,
                               std::size_t budget, std::uint64_t seed, unsigned threads = 1);

// Adjoint family: conjugate transposes, base spaces replaced by the layer-wise
// duals (domain of the adjoint = dual of the original target).
OperatorFamily dualize_family(const OperatorFamily& family);

// Exact l^r(l^s)-bound of an entrywise-nonnegative singleton: its operator
// norm (upper bound by positivity, lower bound by a one-cell witness).
double positive_single_bound(const Matrix& P, const SpaceSpec& spec_in, const SpaceSpec& spec_out);

struct RBoundEstimate {
    double bound = 0.0;
    std::size_t sequence_length = 0;
    std::uint64_t seed = 0;
};

// Lower-bound search for the Rademacher-average ratio. Expectations are exact
// over all 2^K sign patterns for K <= 14 and Monte Carlo (10^4 draws) beyond.
RBoundEstimate estimate_r_bound(const OperatorFamily& family, std::size_t budget,
                                std::uint64_t seed);

// Exact L^2(Omega) Rademacher ratio of one selection/input assignment.
double rademacher_ratio(const OperatorFamily& family, const std::vector<std::size_t>& selection,
                        const std::vector<Vector>& inputs, std::uint64_t mc_seed = 1);

struct TkQuantity {
    double lhs = 0.0;
    double rhs = 0.0;
};

// Closed-form evaluation of the dyadic averaging counterexample on (0,1]:
// lhs = || sup_i ( sum_{j<=n} |T_{i,j} f_{i,j}|^s )^{1/s} ||_{L^p(0,1]} by exact
// piecewise quadrature over dyadic breakpoints, rhs = || sup_i 1_{(0,1]} ||_{L^p} = 1.
TkQuantity tk_quantity(int n, double s, double p);

// Grid discretization of the dyadic averaging kernels k_j, j = 1..n_levels, as
// positive convolution matrices on grid_size points of (0,1].
OperatorFamily tk_discretized_family(int n_levels, std::size_t grid_size, Exponent base_p);

std::string to_json(const LrsWitness& witness);
std::string witness_digest(const LrsWitness& witness);

} // namespace varmult
