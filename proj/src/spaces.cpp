#include "varmult/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace varmult {

Exponent Exponent::conjugate() const {
    if (inf) return Exponent(1.0);
    if (value == 1.0) return Exponent::infinity();
    if (value < 1.0) throw std::invalid_argument("Exponent::conjugate: exponent below 1");
    return Exponent(value / (value - 1.0));
}

std::string Exponent::str() const {
    if (inf) return "inf";
    std::ostringstream os;
    os.precision(15);
    os << value;
    return os.str();
}

Exponent Exponent::parse(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "oo") return infinity();
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return Exponent(std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1)));
    return Exponent(std::stod(text));
}

std::size_t SpaceSpec::total_dim() const {
    std::size_t d = 1;
    for (const auto& l : layers) d *= l.dim;
    return d;
}

void SpaceSpec::validate() const {
    if (layers.empty()) throw std::invalid_argument("SpaceSpec: no layers");
    for (const auto& l : layers) {
        if (l.dim == 0) throw std::invalid_argument("SpaceSpec: zero layer dimension");
        if (!l.p.is_inf() && l.p.value < 1.0)
            throw std::invalid_argument("SpaceSpec: exponent below 1");
    }
}

SpaceSpec SpaceSpec::dual() const {
    SpaceSpec d = *this;
    for (auto& l : d.layers) l.p = l.p.conjugate();
    return d;
}

std::string SpaceSpec::str() const {
    std::string s;
    for (const auto& l : layers) {
        if (!s.empty()) s += "(";
        s += "l^" + l.p.str() + "_" + std::to_string(l.dim);
    }
    for (std::size_t i = 1; i < layers.size(); ++i) s += ")";
    return s;
}

SpaceSpec scalar_space() { return lp_space(Exponent(2.0), 1); }

SpaceSpec lp_space(Exponent p, std::size_t n) {
    SpaceSpec spec;
    spec.layers.push_back({p, n});
    return spec;
}

namespace {

// Reduces a block of nonnegative values with the l^p rule; p = 1, 2, inf
// avoid pow round-trips.
double lp_reduce(std::span<const double> xs, const Exponent& p) {
    if (p.is_inf()) {
        double m = 0.0;
        for (double x : xs) m = std::max(m, x);
        return m;
    }
    if (p.value == 1.0) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    if (p.value == 2.0) {
        double s = 0.0;
        for (double x : xs) s += x * x;
        return std::sqrt(s);
    }
    double s = 0.0;
    for (double x : xs) s += std::pow(x, p.value);
    return std::pow(s, 1.0 / p.value);
}

double norm_recursive(std::span<const double> moduli, const SpaceSpec& spec, std::size_t layer) {
    const auto& l = spec.layers[layer];
    if (layer + 1 == spec.layers.size()) return lp_reduce(moduli, l.p);
    const std::size_t sub = moduli.size() / l.dim;
    std::vector<double> vals(l.dim);
    for (std::size_t i = 0; i < l.dim; ++i)
        vals[i] = norm_recursive(moduli.subspan(i * sub, sub), spec, layer + 1);
    return lp_reduce(vals, l.p);
}

} // namespace

double space_norm(std::span<const double> value, const SpaceSpec& spec) {
    spec.validate();
    if (value.size() != spec.total_dim())
        throw std::invalid_argument("space_norm: value size does not match spec dimensions");
    return norm_recursive(value, spec, 0);
}

double space_norm(std::span<const cplx> value, const SpaceSpec& spec) {
    std::vector<double> moduli(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) moduli[i] = std::abs(value[i]);
    return space_norm(std::span<const double>(moduli), spec);
}

void Weight::validate() const {
    if (values.empty()) throw std::invalid_argument("Weight: empty");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("Weight: entries must be strictly positive and finite");
}

double lp_weighted_norm(const TorusSignal& signal, Exponent p, const Weight& weight,
                        const SpaceSpec& spec) {
    signal.validate();
    weight.validate();
    if (weight.size() != signal.n_points)
        throw std::invalid_argument("lp_weighted_norm: weight length != N");
    if (!p.is_inf() && p.value < 1.0) throw std::invalid_argument("lp_weighted_norm: p < 1");
    const std::size_t n = signal.n_points;
    const std::size_t d = signal.dim();
    if (p.is_inf()) {
        double m = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            m = std::max(m, space_norm(std::span<const cplx>(signal.samples).subspan(j * d, d), spec));
        return m;
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double v = space_norm(std::span<const cplx>(signal.samples).subspan(j * d, d), spec);
        acc += weight.values[j] * std::pow(v, p.value);
    }
    return std::pow(acc / static_cast<double>(n), 1.0 / p.value);
}

double ap_characteristic(const Weight& weight, double p) {
    weight.validate();
    if (p < 1.0) throw std::invalid_argument("ap_characteristic: p < 1");
    const std::size_t n = weight.size();
    // Prefix sums over the doubled array make each arc O(1).
    std::vector<double> pw(2 * n + 1, 0.0);
    std::vector<double> pd(2 * n + 1, 0.0);  // w^{-1/(p-1)} sums (p > 1)
    const bool p1 = (p == 1.0);
    const double dual_exp = p1 ? 0.0 : -1.0 / (p - 1.0);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        double w = weight.values[i % n];
        pw[i + 1] = pw[i] + w;
        pd[i + 1] = pd[i] + (p1 ? 0.0 : std::pow(w, dual_exp));
    }
    double best = 0.0;
    if (p1) {
        // avg(w) * max(w^{-1}) over the arc; sliding max done directly.
        for (std::size_t start = 0; start < n; ++start) {
            double inv_max = 0.0;
            for (std::size_t len = 1; len <= n; ++len) {
                inv_max = std::max(inv_max, 1.0 / weight.values[(start + len - 1) % n]);
                double avg_w = (pw[start + len] - pw[start]) / static_cast<double>(len);
                best = std::max(best, avg_w * inv_max);
            }
        }
        return best;
    }
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t len = 1; len <= n; ++len) {
            double inv_len = 1.0 / static_cast<double>(len);
            double avg_w = (pw[start + len] - pw[start]) * inv_len;
            double avg_d = (pd[start + len] - pd[start]) * inv_len;
            best = std::max(best, avg_w * std::pow(avg_d, p - 1.0));
        }
    }
    return best;
}

double alpha_characteristic(const Weight& weight, double p, Exponent q) {
    weight.validate();
    if (p <= 1.0) throw std::invalid_argument("alpha_characteristic: requires p > 1");
    if (!q.is_inf() && q.value < p)
        throw std::invalid_argument("alpha_characteristic: requires p <= q");
    const double pd = p / (p - 1.0);                         // p'
    const double qd = q.is_inf() ? 1.0 : q.value / (q.value - 1.0);  // q'
    Weight dual;
    dual.values.resize(weight.size());
    for (std::size_t i = 0; i < weight.size(); ++i)
        dual.values[i] = std::pow(weight.values[i], 1.0 - pd);
    return ap_characteristic(dual, pd / qd);
}

Weight power_weight(std::size_t n_points, double alpha, std::size_t center) {
    if (!is_power_of_two(n_points) || n_points < 8)
        throw std::invalid_argument("power_weight: n_points must be a power of two >= 8");
    if (!(alpha > -1.0)) throw std::invalid_argument("power_weight: requires alpha > -1");
    if (center >= n_points) throw std::invalid_argument("power_weight: center out of range");
    Weight w;
    w.values.resize(n_points);
    const double clamp = 1.0 / (2.0 * static_cast<double>(n_points));
    for (std::size_t j = 0; j < n_points; ++j) {
        std::size_t k = j >= center ? j - center : center - j;
        std::size_t wrapped = std::min(k, n_points - k);
        double dist = static_cast<double>(wrapped) / static_cast<double>(n_points);
        w.values[j] = std::pow(std::max(dist, clamp), alpha);
    }
    return w;
}

SpaceSpec concavify(const SpaceSpec& spec, double p) {
    spec.validate();
    if (!(p > 0.0)) throw std::invalid_argument("concavify: requires p > 0");
    SpaceSpec out = spec;
    for (std::size_t i = 0; i < out.layers.size(); ++i) {
        auto& l = out.layers[i];
        if (l.p.is_inf()) continue;
        double r = l.p.value / p;
        if (r < 1.0)
            throw std::invalid_argument("concavify: layer " + std::to_string(i) + " has r/p = " +
                                        std::to_string(r) + " < 1, not a norm");
        l.p = Exponent(r);
    }
    return out;
}

void write_csv(const Weight& weight, std::ostream& os) {
    weight.validate();
    os << "index,value\n";
    os.precision(17);
    for (std::size_t i = 0; i < weight.size(); ++i) os << i << "," << weight.values[i] << "\n";
}

Weight read_csv_weight(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("weight CSV: missing header");
    Weight w;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("weight CSV: bad row");
        w.values.push_back(std::stod(line.substr(comma + 1)));
    }
    w.validate();
    return w;
}

} // namespace varmult
