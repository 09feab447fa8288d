#include "varmult/opfamily.hpp"

#include "varmult/rng.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace varmult {

void OperatorFamily::validate() const {
    if (matrices.empty()) throw std::invalid_argument("OperatorFamily: empty");
    const auto rows = matrices[0].rows();
    for (const auto& m : matrices) {
        if (m.rows() != m.cols() || m.rows() != rows)
            throw std::invalid_argument("OperatorFamily: matrices must be square and uniformly sized");
    }
    if (base_space_in.total_dim() != static_cast<std::size_t>(rows) ||
        base_space_out.total_dim() != static_cast<std::size_t>(rows))
        throw std::invalid_argument("OperatorFamily: base space dimension mismatch");
    if (positive) {
        for (const auto& m : matrices)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                for (Eigen::Index j = 0; j < m.cols(); ++j)
                    if (m(i, j).imag() != 0.0 || m(i, j).real() < 0.0)
                        throw std::invalid_argument("OperatorFamily: positive flag with negative entry");
    }
}

OperatorFamily make_family(std::vector<Matrix> matrices, SpaceSpec space_in, SpaceSpec space_out) {
    OperatorFamily fam;
    fam.matrices = std::move(matrices);
    fam.base_space_in = std::move(space_in);
    fam.base_space_out = std::move(space_out);
    bool pos = true;
    for (const auto& m : fam.matrices)
        for (Eigen::Index i = 0; i < m.rows() && pos; ++i)
            for (Eigen::Index j = 0; j < m.cols() && pos; ++j)
                if (m(i, j).imag() != 0.0 || m(i, j).real() < 0.0) pos = false;
    fam.positive = pos;
    fam.validate();
    return fam;
}

namespace {

bool single_layer(const SpaceSpec& s) { return s.layers.size() == 1; }

bool is_l2_tower(const SpaceSpec& s) {
    for (const auto& l : s.layers)
        if (l.p.is_inf() || l.p.value != 2.0) return false;
    return true;
}

bool is_diagonal(const Matrix& T) {
    for (Eigen::Index i = 0; i < T.rows(); ++i)
        for (Eigen::Index j = 0; j < T.cols(); ++j)
            if (i != j && T(i, j) != cplx(0.0, 0.0)) return false;
    return true;
}

bool specs_equal(const SpaceSpec& a, const SpaceSpec& b) {
    if (a.layers.size() != b.layers.size()) return false;
    for (std::size_t i = 0; i < a.layers.size(); ++i) {
        if (a.layers[i].dim != b.layers[i].dim) return false;
        if (a.layers[i].p.is_inf() != b.layers[i].p.is_inf()) return false;
        if (!a.layers[i].p.is_inf() && a.layers[i].p.value != b.layers[i].p.value) return false;
    }
    return true;
}

double vec_norm(const Vector& v, const SpaceSpec& spec) {
    return space_norm(std::span<const cplx>(v.data(), static_cast<std::size_t>(v.size())), spec);
}

double ratio_at(const Matrix& T, const SpaceSpec& in, const SpaceSpec& out, const Vector& x) {
    double nx = vec_norm(x, in);
    if (nx <= 0.0) return 0.0;
    return vec_norm(T * x, out) / nx;
}

} // namespace

OpNormResult operator_norm(const Matrix& T, const SpaceSpec& spec_in, const SpaceSpec& spec_out,
                           std::uint64_t seed, int restarts) {
    const std::size_t d = static_cast<std::size_t>(T.rows());
    if (T.rows() != T.cols()) throw std::invalid_argument("operator_norm: square matrices only");
    if (spec_in.total_dim() != d || spec_out.total_dim() != d)
        throw std::invalid_argument("operator_norm: space dimension mismatch");

    // Exact cases first.
    if (is_l2_tower(spec_in) && is_l2_tower(spec_out)) {
        Eigen::JacobiSVD<Matrix> svd(T);
        return {svd.singularValues()(0), true};
    }
    if (single_layer(spec_in) && !spec_in.layers[0].p.is_inf() && spec_in.layers[0].p.value == 1.0) {
        // extreme points of the l^1-ball are the (phased) coordinate vectors
        double best = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            Vector col = T.col(static_cast<Eigen::Index>(j));
            best = std::max(best, vec_norm(col, spec_out));
        }
        return {best, true};
    }
    if (is_diagonal(T) && specs_equal(spec_in, spec_out)) {
        double best = 0.0;
        for (std::size_t j = 0; j < d; ++j)
            best = std::max(best, std::abs(T(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j))));
        return {best, true};
    }
    if (single_layer(spec_out) && spec_out.layers[0].p.is_inf() && single_layer(spec_in)) {
        // ||Tx||_inf = max_i |<row_i, x>| <= max_i ||row_i||_{p'} ||x||_p, attained per row
        double best = 0.0;
        SpaceSpec dual_in = spec_in.dual();
        for (std::size_t i = 0; i < d; ++i) {
            Vector row = T.row(static_cast<Eigen::Index>(i)).transpose();
            best = std::max(best, vec_norm(row, dual_in));
        }
        return {best, true};
    }

    // Sign/coordinate pattern sweep: entries from {0, 1, -1, i, -i}.
    double best = 0.0;
    if (d <= 3) {
        const cplx alphabet[5] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        std::size_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= 5;
        Vector x(static_cast<Eigen::Index>(d));
        for (std::size_t code = 1; code < total; ++code) {
            std::size_t rem = code;
            for (std::size_t i = 0; i < d; ++i) {
                x(static_cast<Eigen::Index>(i)) = alphabet[rem % 5];
                rem /= 5;
            }
            best = std::max(best, ratio_at(T, spec_in, spec_out, x));
        }
    }

    // Projected ascent from random starts.
    for (int r = 0; r < restarts; ++r) {
        auto rng = make_stream(seed, 0xa11ce + static_cast<std::uint64_t>(r));
        std::normal_distribution<double> gauss(0.0, 1.0);
        Vector x(static_cast<Eigen::Index>(d));
        for (std::size_t i = 0; i < d; ++i) x(static_cast<Eigen::Index>(i)) = cplx(gauss(rng), gauss(rng));
        double cur = ratio_at(T, spec_in, spec_out, x);
        double step = 0.5;
        for (int it = 0; it < 200; ++it) {
            Vector pert(static_cast<Eigen::Index>(d));
            for (std::size_t i = 0; i < d; ++i)
                pert(static_cast<Eigen::Index>(i)) = cplx(gauss(rng), gauss(rng));
            Vector y = x + step * pert;
            double cand = ratio_at(T, spec_in, spec_out, y);
            if (cand > cur) {
                x = y;
                cur = cand;
                step = std::min(step * 1.3, 1.0);
            } else {
                step *= 0.7;
                if (step < 1e-10) break;
            }
        }
        best = std::max(best, cur);
    }
    return {best, d <= 3};
}

} // namespace varmult
