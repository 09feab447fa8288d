#pragma once

#include "varmult/torus.hpp"

#include <span>
#include <string>
#include <vector>

namespace varmult {

// A Lebesgue exponent in [1, inf]; infinity is a symbolic tag, never a float.
struct Exponent {
    double value = 2.0;
    bool inf = false;

    Exponent() = default;
    Exponent(double v) : value(v) {}
    static Exponent infinity() {
        Exponent e;
        e.inf = true;
        return e;
    }
    bool is_inf() const { return inf; }
    // Conjugate exponent: 1' = inf, inf' = 1, else p/(p-1).
    Exponent conjugate() const;
    std::string str() const;
    static Exponent parse(const std::string& text);
};

// Descriptor of a nested sequence-space norm: layers outermost first, each an
// l^p over a fixed dimension. The product of dimensions must match the flat
// coordinate dimension of any value the norm is applied to.
struct SpaceSpec {
    struct Layer {
        Exponent p;
        std::size_t dim = 1;
    };
    std::vector<Layer> layers;

    std::size_t total_dim() const;
    void validate() const;
    // Layer-wise dual spec: each exponent replaced by its conjugate.
    SpaceSpec dual() const;
    std::string str() const;
};

SpaceSpec scalar_space();                       // trivial 1-dimensional space
SpaceSpec lp_space(Exponent p, std::size_t n);  // single layer l^p_n

// Recursive mixed norm; the innermost layer acts on componentwise moduli and
// exponent infinity means maximum.
double space_norm(std::span<const cplx> value, const SpaceSpec& spec);
double space_norm(std::span<const double> value, const SpaceSpec& spec);

// Strictly positive grid function.
struct Weight {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    void validate() const;
};

// ((1/N) sum_j w_j ||f_j||_spec^p)^{1/p}; exponent infinity gives the max.
double lp_weighted_norm(const TorusSignal& signal, Exponent p, const Weight& weight,
                        const SpaceSpec& spec);

// Muckenhoupt characteristic over all torus arcs (wraparound included):
// sup_B avg_B(w) avg_B(w^{-1/(p-1)})^{p-1}, with max_B(w^{-1}) replacing the
// second factor when p = 1.
double ap_characteristic(const Weight& weight, double p);

// [w]_{alpha_{p,q}} = [w^{1-p'}]_{A_{p'/q'}}, for 1 < p <= q <= inf.
double alpha_characteristic(const Weight& weight, double p, Exponent q);

// w_j = d(j, center)^alpha with torus distance d in [0, 1/2], clamped below by
// 1/(2N) at the singular point. Requires alpha > -1.
Weight power_weight(std::size_t n_points, double alpha, std::size_t center);

// p-concavification: each layer exponent r -> r/p; rejects if some r/p < 1.
SpaceSpec concavify(const SpaceSpec& spec, double p);

void write_csv(const Weight& weight, std::ostream& os);
Weight read_csv_weight(std::istream& is);

} // namespace varmult
