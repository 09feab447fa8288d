#pragma once

#include "varmult/spaces.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace varmult {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// A finite set of square operators on a mixed-norm coordinate space, playing
// the role of the multiplier family T. positive means all entries are real
// and nonnegative.
struct OperatorFamily {
    std::vector<Matrix> matrices;
    SpaceSpec base_space_in;
    SpaceSpec base_space_out;
    bool positive = false;

    std::size_t size() const { return matrices.size(); }
    std::size_t dim() const { return matrices.empty() ? 0 : static_cast<std::size_t>(matrices[0].rows()); }
    void validate() const;
};

OperatorFamily make_family(std::vector<Matrix> matrices, SpaceSpec space_in, SpaceSpec space_out);

struct OpNormResult {
    double value = 0.0;
    bool certified = false;  // exact formula applied, or exhaustively searched in dim <= 3
};

// Induced norm of T from (C^d, spec_in) to (C^d, spec_out). Exact for
// l^2 -> l^2 (SVD), l^1 domains, l^inf targets with single-layer domains, and
// diagonal T with spec_in == spec_out; otherwise seeded projected ascent with
// sign/coordinate pattern sweeps (reported certified only in dimension <= 3).
OpNormResult operator_norm(const Matrix& T, const SpaceSpec& spec_in, const SpaceSpec& spec_out,
                           std::uint64_t seed = 0, int restarts = 32);

} // namespace varmult
