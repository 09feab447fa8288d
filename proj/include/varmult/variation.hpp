#pragma once

#include "varmult/opfamily.hpp"
#include "varmult/symbol.hpp"
#include "varmult/torus.hpp"

#include <memory>
#include <string>

namespace varmult {

// Norm used to measure symbol values: either an induced operator norm between
// two mixed-norm spaces, or the Minkowski gauge of the absolutely convex hull
// of a finite operator family.
struct GaugeSpec {
    enum class Kind { operator_norm, minkowski };
    Kind kind = Kind::operator_norm;
    SpaceSpec spec_in;
    SpaceSpec spec_out;
    std::shared_ptr<const OperatorFamily> family;

    static GaugeSpec op_norm(SpaceSpec in, SpaceSpec out);
    static GaugeSpec minkowski(OperatorFamily family);
    // Scalar and matrix values measured by the l^2 -> l^2 operator norm.
    static GaugeSpec spectral(std::size_t dim);
};

struct GaugeValue {
    double value = 0.0;      // +infinity when the target is outside the family span
    bool certified = false;
    std::string note;
};

// Minkowski kind: min sum |lambda_i| over complex lambda with
// sum lambda_i T_i = T, solved as a linear program on real/imaginary parts
// with tangent-direction refinement. Infeasible targets report +infinity.
GaugeValue gauge_value(const Matrix& T, const GaugeSpec& gauge);

// Symbol values over the consecutive frequencies of one dyadic block.
struct BlockValues {
    long long first_freq = 0;
    std::vector<Matrix> entries;
    GaugeSpec gauge;

    std::size_t size() const { return entries.size(); }
    void validate() const;
};

BlockValues block_restrict(const Symbol& symbol, const FrequencyInterval& block,
                           const GaugeSpec& gauge);

// Exact sup over partitions of sum of gauge(increment)^s, endpoints forced,
// computed by dynamic programming over split points.
double variation_seminorm(const BlockValues& block, double s);

double sup_gauge(const BlockValues& block);

// sup over dyadic blocks of sup-gauge + variation seminorm; singleton blocks
// contribute their gauge alone.
double vs_norm(const Symbol& symbol, double s, const GaugeSpec& gauge);

struct HolderQuantity {
    double scaled_seminorm = 0.0;  // |J|^alpha * [f]_{C^alpha}
    double lemma_bound = 0.0;      // ||f||_inf + |J|^alpha * [f]_{C^alpha}
};

HolderQuantity holder_quantity(const BlockValues& block, double alpha);

struct Atom {
    std::vector<FrequencyInterval> intervals;  // mutually disjoint within the block
    std::vector<Matrix> coeffs;                // one per interval
};

struct AtomicDecomposition {
    std::vector<double> lambdas;
    std::vector<Atom> atoms;
    double target_q = 2.0;
};

// Greedy stopping-time layering: thresholds 2^{-k} * vs-norm, plateau averages
// per layer, each layer emitted as one atom of unit l^q coefficient mass.
// Guaranteed never worse (in l^1 mass) than the single-atom fallback.
AtomicDecomposition atomic_decompose(const BlockValues& block, double s, double q);

// l^q mass of the trivial one-atom representation by maximal constant runs.
double single_atom_mass(const BlockValues& block, double q);

struct DecompositionReport {
    double max_reconstruction_error = 0.0;
    std::vector<double> atom_masses;   // (sum gauge(c_I)^q)^{1/q} per atom
    std::vector<double> atom_vq_norms; // V^q norm of each atom as a step function
    double lambda_l1 = 0.0;
    bool atoms_valid = false;          // every mass <= 1 + 1e-9
    bool reconstructs = false;         // error <= 1e-10
    bool vq_bound_ok = false;          // every atom V^q norm <= 3
};

DecompositionReport validate_decomposition(const AtomicDecomposition& dec,
                                           const BlockValues& block);

std::string to_json(const AtomicDecomposition& dec);

// Family containing the sampled symbol values together with the scaled
// difference quotients (m(x)-m(y))/|x-y|^alpha * |J|^alpha within each dyadic
// block, so that the sampled values have Minkowski gauge <= 1 and the scaled
// Hoelder seminorm of the sampled pairs is <= 1.
OperatorFamily build_holder_family(const Symbol& symbol, double alpha,
                                   std::size_t samples_per_block);

} // namespace varmult
