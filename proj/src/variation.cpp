#include "varmult/variation.hpp"

#include "varmult/lp.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace varmult {

GaugeSpec GaugeSpec::op_norm(SpaceSpec in, SpaceSpec out) {
    GaugeSpec g;
    g.kind = Kind::operator_norm;
    g.spec_in = std::move(in);
    g.spec_out = std::move(out);
    return g;
}

GaugeSpec GaugeSpec::minkowski(OperatorFamily family) {
    family.validate();
    GaugeSpec g;
    g.kind = Kind::minkowski;
    g.family = std::make_shared<OperatorFamily>(std::move(family));
    return g;
}

GaugeSpec GaugeSpec::spectral(std::size_t dim) {
    return op_norm(lp_space(Exponent(2.0), dim), lp_space(Exponent(2.0), dim));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// min sum |lambda_i| with sum lambda_i T_i = T over complex lambda. Moduli are
// handled by writing lambda_i as a nonnegative combination of unit phases;
// after each solve the attained phase of every coefficient is added as a new
// direction, so the optimum converges to the exact complex l^1 minimum.
GaugeValue minkowski_gauge(const Matrix& T, const OperatorFamily& fam) {
    const std::size_t F = fam.size();
    const std::size_t d = fam.dim();
    if (static_cast<std::size_t>(T.rows()) != d || static_cast<std::size_t>(T.cols()) != d)
        throw std::invalid_argument("gauge_value: target dimension mismatch");

    if (d == 1 && F >= 1) {
        // Scalar shortcut: min sum|lambda| = |t| / max_i |g_i|.
        double gmax = 0.0;
        for (const auto& m : fam.matrices) gmax = std::max(gmax, std::abs(m(0, 0)));
        double t = std::abs(T(0, 0));
        if (gmax == 0.0) return {t == 0.0 ? 0.0 : kInf, true,
                                 t == 0.0 ? "" : "target outside span of zero family"};
        return {t / gmax, true, ""};
    }

    const std::size_t rows = 2 * d * d;
    std::vector<double> b(rows);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            b[2 * (r * d + c)] = T(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)).real();
            b[2 * (r * d + c) + 1] = T(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)).imag();
        }

    std::vector<std::vector<double>> phases(F);
    for (std::size_t i = 0; i < F; ++i)
        for (int m = 0; m < 8; ++m) phases[i].push_back(m * std::numbers::pi / 4.0);

    double prev = kInf;
    LpResult res;
    std::vector<std::pair<std::size_t, double>> columns;  // (family index, phase)
    for (int round = 0; round < 30; ++round) {
        columns.clear();
        for (std::size_t i = 0; i < F; ++i)
            for (double ph : phases[i]) columns.emplace_back(i, ph);
        const std::size_t n_cols = columns.size();
        std::vector<double> A(rows * n_cols);
        for (std::size_t cix = 0; cix < n_cols; ++cix) {
            const auto& [fi, ph] = columns[cix];
            const cplx rot(std::cos(ph), std::sin(ph));
            const Matrix& G = fam.matrices[fi];
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) {
                    cplx v = rot * G(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                    A[(2 * (r * d + c)) * n_cols + cix] = v.real();
                    A[(2 * (r * d + c) + 1) * n_cols + cix] = v.imag();
                }
        }
        std::vector<double> cost(n_cols, 1.0);
        res = solve_lp(A, b, cost, rows, n_cols);
        if (res.status == LpStatus::infeasible)
            return {kInf, false, "target outside the span of the family"};
        if (res.status == LpStatus::unbounded)
            return {kInf, false, "gauge LP unbounded (degenerate family)"};

        // Recover lambda_i and refine phase directions.
        bool added = false;
        std::vector<cplx> lambda(F, cplx(0, 0));
        for (std::size_t cix = 0; cix < n_cols; ++cix) {
            if (res.x[cix] <= 0.0) continue;
            const auto& [fi, ph] = columns[cix];
            lambda[fi] += res.x[cix] * cplx(std::cos(ph), std::sin(ph));
        }
        for (std::size_t i = 0; i < F; ++i) {
            double mod = std::abs(lambda[i]);
            if (mod < 1e-14) continue;
            double arg = std::atan2(lambda[i].imag(), lambda[i].real());
            bool present = false;
            for (double ph : phases[i]) {
                double diff = std::remainder(arg - ph, 2.0 * std::numbers::pi);
                if (std::abs(diff) < 1e-12) present = true;
            }
            if (!present) {
                phases[i].push_back(arg);
                added = true;
            }
        }
        if (!added || res.objective >= prev - 1e-13 * std::max(1.0, prev)) break;
        prev = res.objective;
    }
    return {std::max(res.objective, 0.0), true, ""};
}

} // namespace

GaugeValue gauge_value(const Matrix& T, const GaugeSpec& gauge) {
    if (gauge.kind == GaugeSpec::Kind::operator_norm) {
        auto r = operator_norm(T, gauge.spec_in, gauge.spec_out);
        return {r.value, r.certified, r.certified ? "" : "estimate"};
    }
    if (!gauge.family || gauge.family->size() == 0)
        throw std::invalid_argument("gauge_value: minkowski gauge requires a nonempty family");
    return minkowski_gauge(T, *gauge.family);
}

void BlockValues::validate() const {
    if (entries.empty()) throw std::invalid_argument("BlockValues: empty");
    const auto rows = entries[0].rows();
    for (const auto& m : entries)
        if (m.rows() != rows || m.cols() != entries[0].cols())
            throw std::invalid_argument("BlockValues: entries must be uniformly sized");
}

BlockValues block_restrict(const Symbol& symbol, const FrequencyInterval& block,
                           const GaugeSpec& gauge) {
    symbol.validate();
    if (block.lo < symbol.k_min() || block.hi > symbol.k_max())
        throw std::invalid_argument("block_restrict: block outside frequency range");
    BlockValues bv;
    bv.first_freq = block.lo;
    bv.gauge = gauge;
    for (long long k = block.lo; k < block.hi; ++k) bv.entries.push_back(symbol.at(k));
    return bv;
}

double sup_gauge(const BlockValues& block) {
    block.validate();
    double best = 0.0;
    for (const auto& m : block.entries) best = std::max(best, gauge_value(m, block.gauge).value);
    return best;
}

double variation_seminorm(const BlockValues& block, double s) {
    block.validate();
    if (s < 1.0) throw std::invalid_argument("variation_seminorm: requires s >= 1");
    const std::size_t L = block.size();
    if (L < 2) return 0.0;
    // gauge of every increment pair (j < i)
    std::vector<double> pow_inc(L * L, 0.0);
    for (std::size_t i = 1; i < L; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Matrix diff = block.entries[i] - block.entries[j];
            pow_inc[i * L + j] = std::pow(gauge_value(diff, block.gauge).value, s);
        }
    // best[i]: largest partition sum over points of {0..i} containing 0 and i;
    // ties resolved toward the earlier split index by strict improvement.
    std::vector<double> best(L, 0.0);
    for (std::size_t i = 1; i < L; ++i) {
        double b = -1.0;
        for (std::size_t j = 0; j < i; ++j) {
            double cand = best[j] + pow_inc[i * L + j];
            if (cand > b) b = cand;
        }
        best[i] = b;
    }
    return std::pow(best[L - 1], 1.0 / s);
}

double vs_norm(const Symbol& symbol, double s, const GaugeSpec& gauge) {
    symbol.validate();
    DyadicPartition part = dyadic_partition(symbol.n_points);
    double best = 0.0;
    for (const auto& blk : part.blocks) {
        BlockValues bv = block_restrict(symbol, blk, gauge);
        double v = sup_gauge(bv);
        if (bv.size() >= 2) v += variation_seminorm(bv, s);
        best = std::max(best, v);
    }
    return best;
}

HolderQuantity holder_quantity(const BlockValues& block, double alpha) {
    block.validate();
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("holder_quantity: requires alpha in (0,1]");
    const std::size_t L = block.size();
    if (L < 2) throw std::invalid_argument("holder_quantity: block length >= 2 required");
    double semi = 0.0;
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = i + 1; j < L; ++j) {
            Matrix diff = block.entries[j] - block.entries[i];
            double g = gauge_value(diff, block.gauge).value;
            semi = std::max(semi, g / std::pow(static_cast<double>(j - i), alpha));
        }
    HolderQuantity h;
    h.scaled_seminorm = std::pow(static_cast<double>(L), alpha) * semi;
    h.lemma_bound = sup_gauge(block) + h.scaled_seminorm;
    return h;
}

namespace {

double atom_mass(const Atom& atom, const GaugeSpec& gauge, double q) {
    double acc = 0.0;
    for (const auto& c : atom.coeffs) acc += std::pow(gauge_value(c, gauge).value, q);
    return std::pow(acc, 1.0 / q);
}

AtomicDecomposition fallback_decomposition(const BlockValues& block, double q) {
    const std::size_t L = block.size();
    Atom atom;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= L; ++i) {
        if (i == L || (block.entries[i] - block.entries[start]).cwiseAbs().maxCoeff() != 0.0) {
            atom.intervals.push_back({block.first_freq + static_cast<long long>(start),
                                      block.first_freq + static_cast<long long>(i)});
            atom.coeffs.push_back(block.entries[start]);
            start = i;
        }
    }
    double mass = atom_mass(atom, block.gauge, q);
    AtomicDecomposition dec;
    dec.target_q = q;
    if (mass <= 0.0) return dec;  // zero block: empty decomposition
    for (auto& c : atom.coeffs) c /= mass;
    dec.atoms.push_back(std::move(atom));
    dec.lambdas.push_back(mass);
    return dec;
}

} // namespace

double single_atom_mass(const BlockValues& block, double q) {
    block.validate();
    AtomicDecomposition dec = fallback_decomposition(block, q);
    return dec.lambdas.empty() ? 0.0 : dec.lambdas[0];
}

AtomicDecomposition atomic_decompose(const BlockValues& block, double s, double q) {
    block.validate();
    if (!(s >= 1.0) || !(q > s)) throw std::invalid_argument("atomic_decompose: requires q > s >= 1");
    const std::size_t L = block.size();
    const double total_norm = sup_gauge(block) + variation_seminorm(block, s);
    constexpr double kResidualTol = 1e-12;

    AtomicDecomposition dec;
    dec.target_q = q;
    if (total_norm <= kResidualTol) return dec;  // zero block

    std::vector<Matrix> residual = block.entries;
    auto residual_gauge = [&] {
        double g = 0.0;
        for (const auto& m : residual) g = std::max(g, gauge_value(m, block.gauge).value);
        return g;
    };

    for (int layer = 1; layer <= 60; ++layer) {
        if (residual_gauge() <= kResidualTol) break;
        const double threshold = std::ldexp(total_norm, -layer);  // 2^{-layer} * vs-norm
        const double threshold_pow = std::pow(threshold, s);
        // stopping-time cuts: accumulated s-variation since the last cut
        std::vector<std::size_t> cuts{0};
        double acc = 0.0;
        for (std::size_t i = 1; i < L; ++i) {
            Matrix diff = residual[i] - residual[i - 1];
            acc += std::pow(gauge_value(diff, block.gauge).value, s);
            if (acc > threshold_pow) {
                cuts.push_back(i);
                acc = 0.0;
            }
        }
        cuts.push_back(L);

        Atom atom;
        std::vector<Matrix> plateau;
        for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
            const std::size_t a = cuts[seg], bb = cuts[seg + 1];
            Matrix avg = Matrix::Zero(residual[0].rows(), residual[0].cols());
            for (std::size_t i = a; i < bb; ++i) avg += residual[i];
            avg /= static_cast<double>(bb - a);
            atom.intervals.push_back({block.first_freq + static_cast<long long>(a),
                                      block.first_freq + static_cast<long long>(bb)});
            atom.coeffs.push_back(avg);
            plateau.push_back(avg);
        }
        double mass = atom_mass(atom, block.gauge, q);
        if (mass > kResidualTol) {
            for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg)
                for (std::size_t i = cuts[seg]; i < cuts[seg + 1]; ++i) residual[i] -= plateau[seg];
            for (auto& c : atom.coeffs) c /= mass;
            dec.atoms.push_back(std::move(atom));
            dec.lambdas.push_back(mass);
        }
    }

    if (residual_gauge() > kResidualTol) {
        // exact residual atom on maximal constant runs
        BlockValues rest;
        rest.first_freq = block.first_freq;
        rest.entries = residual;
        rest.gauge = block.gauge;
        AtomicDecomposition tail = fallback_decomposition(rest, q);
        for (std::size_t i = 0; i < tail.atoms.size(); ++i) {
            dec.atoms.push_back(std::move(tail.atoms[i]));
            dec.lambdas.push_back(tail.lambdas[i]);
        }
    }

    // Never worse than the trivial one-atom representation.
    double greedy_l1 = 0.0;
    for (double l : dec.lambdas) greedy_l1 += l;
    AtomicDecomposition fallback = fallback_decomposition(block, q);
    double fallback_l1 = fallback.lambdas.empty() ? 0.0 : fallback.lambdas[0];
    if (!fallback.lambdas.empty() && greedy_l1 > fallback_l1) return fallback;
    return dec;
}

DecompositionReport validate_decomposition(const AtomicDecomposition& dec,
                                           const BlockValues& block) {
    block.validate();
    const std::size_t L = block.size();
    const double q = dec.target_q;
    DecompositionReport rep;

    std::vector<Matrix> recon(L, Matrix::Zero(block.entries[0].rows(), block.entries[0].cols()));
    for (std::size_t a = 0; a < dec.atoms.size(); ++a) {
        const Atom& atom = dec.atoms[a];
        for (std::size_t t = 0; t < atom.intervals.size(); ++t) {
            const auto& iv = atom.intervals[t];
            for (long long k = iv.lo; k < iv.hi; ++k) {
                long long idx = k - block.first_freq;
                if (idx < 0 || idx >= static_cast<long long>(L))
                    throw std::invalid_argument("validate_decomposition: interval outside block");
                recon[static_cast<std::size_t>(idx)] += dec.lambdas[a] * atom.coeffs[t];
            }
        }
    }
    for (std::size_t i = 0; i < L; ++i) {
        Matrix diff = recon[i] - block.entries[i];
        rep.max_reconstruction_error =
            std::max(rep.max_reconstruction_error, gauge_value(diff, block.gauge).value);
    }

    rep.atoms_valid = true;
    rep.vq_bound_ok = true;
    for (const auto& atom : dec.atoms) {
        double mass = atom_mass(atom, block.gauge, q);
        rep.atom_masses.push_back(mass);
        if (mass > 1.0 + 1e-9) rep.atoms_valid = false;
        // atom as a step function over the whole block (zero off its intervals)
        BlockValues step;
        step.first_freq = block.first_freq;
        step.gauge = block.gauge;
        step.entries.assign(L, Matrix::Zero(block.entries[0].rows(), block.entries[0].cols()));
        for (std::size_t t = 0; t < atom.intervals.size(); ++t)
            for (long long k = atom.intervals[t].lo; k < atom.intervals[t].hi; ++k)
                step.entries[static_cast<std::size_t>(k - block.first_freq)] = atom.coeffs[t];
        double vq = sup_gauge(step) + variation_seminorm(step, q);
        rep.atom_vq_norms.push_back(vq);
        if (vq > 3.0) rep.vq_bound_ok = false;
    }
    for (double l : dec.lambdas) rep.lambda_l1 += std::abs(l);
    rep.reconstructs = rep.max_reconstruction_error <= 1e-10;
    return rep;
}

std::string to_json(const AtomicDecomposition& dec) {
    nlohmann::json j;
    j["q"] = dec.target_q;
    j["lambdas"] = dec.lambdas;
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& atom : dec.atoms) {
        nlohmann::json ja;
        nlohmann::json ivs = nlohmann::json::array();
        for (const auto& iv : atom.intervals) ivs.push_back({iv.lo, iv.hi});
        ja["intervals"] = std::move(ivs);
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : atom.coeffs) {
            std::vector<double> flat;
            for (Eigen::Index r = 0; r < c.rows(); ++r)
                for (Eigen::Index cc = 0; cc < c.cols(); ++cc) {
                    flat.push_back(c(r, cc).real());
                    flat.push_back(c(r, cc).imag());
                }
            coeffs.push_back(flat);
        }
        ja["coeffs"] = std::move(coeffs);
        atoms.push_back(std::move(ja));
    }
    j["atoms"] = std::move(atoms);
    return j.dump();
}

OperatorFamily build_holder_family(const Symbol& symbol, double alpha,
                                   std::size_t samples_per_block) {
    symbol.validate();
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("build_holder_family: requires alpha in (0,1]");
    if (samples_per_block < 2) samples_per_block = 2;
    DyadicPartition part = dyadic_partition(symbol.n_points);
    std::vector<Matrix> members;
    auto push_nonzero = [&members](const Matrix& m) {
        if (m.cwiseAbs().maxCoeff() > 0.0) members.push_back(m);
    };
    for (const auto& blk : part.blocks) {
        const std::size_t L = static_cast<std::size_t>(blk.length());
        const std::size_t S = std::min(L, samples_per_block);
        std::vector<long long> pts;
        if (S == 1) {
            pts.push_back(blk.lo);
        } else {
            for (std::size_t i = 0; i < S; ++i)
                pts.push_back(blk.lo + static_cast<long long>((i * (L - 1)) / (S - 1)));
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        }
        const double scale_J = std::pow(static_cast<double>(blk.length()), alpha);
        for (long long k : pts) push_nonzero(symbol.at(k));
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t bb = a + 1; bb < pts.size(); ++bb) {
                Matrix diff = symbol.at(pts[bb]) - symbol.at(pts[a]);
                double dist = static_cast<double>(pts[bb] - pts[a]);
                push_nonzero(diff * (scale_J / std::pow(dist, alpha)));
            }
    }
    if (members.empty())
        members.push_back(Matrix::Zero(static_cast<Eigen::Index>(symbol.dim),
                                       static_cast<Eigen::Index>(symbol.dim)));
    OperatorFamily fam;
    fam.matrices = std::move(members);
    fam.base_space_in = lp_space(Exponent(2.0), symbol.dim);
    fam.base_space_out = lp_space(Exponent(2.0), symbol.dim);
    fam.positive = false;
    fam.validate();
    return fam;
}

} // namespace varmult
