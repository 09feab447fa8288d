#include "varmult/torus.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace varmult {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

std::size_t shape_product(const std::vector<std::size_t>& shape) {
    std::size_t d = 1;
    for (std::size_t s : shape) {
        if (s == 0) throw std::invalid_argument("dim_shape entries must be positive");
        d *= s;
    }
    return d;
}

void require_grid(std::size_t n) {
    if (!is_power_of_two(n) || n < 8)
        throw std::invalid_argument("n_points must be a power of two >= 8");
}

// In-place radix-2 decimation-in-time FFT on a stride-1 buffer of length n.
// sign = -1 gives sum_j x_j e^{-2pi i jk/n}, sign = +1 the conjugate transform.
void fft_pow2(std::vector<cplx>& x, int sign) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx w(std::cos(ang * static_cast<double>(k)),
                             std::sin(ang * static_cast<double>(k)));
                cplx u = x[i + k];
                cplx v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
            }
        }
    }
}

} // namespace

TorusSignal::TorusSignal(std::size_t n, std::vector<std::size_t> shape)
    : n_points(n), dim_shape(std::move(shape)) {
    require_grid(n);
    samples.assign(n_points * dim(), cplx(0.0, 0.0));
}

std::size_t TorusSignal::dim() const { return shape_product(dim_shape); }

cplx& TorusSignal::at(std::size_t sample, std::size_t component) {
    return samples[sample * dim() + component];
}
const cplx& TorusSignal::at(std::size_t sample, std::size_t component) const {
    return samples[sample * dim() + component];
}

void TorusSignal::validate() const {
    require_grid(n_points);
    if (samples.size() != n_points * dim())
        throw std::invalid_argument("TorusSignal: samples length != N * product(dim_shape)");
}

Spectrum::Spectrum(std::size_t n, std::vector<std::size_t> shape)
    : n_points(n), dim_shape(std::move(shape)) {
    require_grid(n);
    coeffs.assign(n_points * dim(), cplx(0.0, 0.0));
}

std::size_t Spectrum::dim() const { return shape_product(dim_shape); }

cplx& Spectrum::at(long long k, std::size_t component) {
    return coeffs[static_cast<std::size_t>(k - k_min()) * dim() + component];
}
const cplx& Spectrum::at(long long k, std::size_t component) const {
    return coeffs[static_cast<std::size_t>(k - k_min()) * dim() + component];
}

Spectrum dft(const TorusSignal& signal) {
    signal.validate();
    const std::size_t n = signal.n_points;
    const std::size_t d = signal.dim();
    Spectrum spec(n, signal.dim_shape);
    std::vector<cplx> buf(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t j = 0; j < n; ++j) buf[j] = signal.samples[j * d + c];
        fft_pow2(buf, -1);
        // buf[k] for k in [0, N); fold to centered order and scale by 1/N
        for (long long k = spec.k_min(); k < spec.k_max(); ++k) {
            std::size_t idx = static_cast<std::size_t>((k + static_cast<long long>(n)) %
                                                       static_cast<long long>(n));
            spec.at(k, c) = buf[idx] * inv_n;
        }
    }
    return spec;
}

TorusSignal idft(const Spectrum& spectrum) {
    const std::size_t n = spectrum.n_points;
    require_grid(n);
    const std::size_t d = spectrum.dim();
    if (spectrum.coeffs.size() != n * d)
        throw std::invalid_argument("Spectrum: coeffs length != N * product(dim_shape)");
    TorusSignal sig(n, spectrum.dim_shape);
    std::vector<cplx> buf(n);
    for (std::size_t c = 0; c < d; ++c) {
        for (long long k = spectrum.k_min(); k < spectrum.k_max(); ++k) {
            std::size_t idx = static_cast<std::size_t>((k + static_cast<long long>(n)) %
                                                       static_cast<long long>(n));
            buf[idx] = spectrum.at(k, c);
        }
        fft_pow2(buf, +1);
        for (std::size_t j = 0; j < n; ++j) sig.samples[j * d + c] = buf[j];
    }
    return sig;
}

DyadicPartition dyadic_partition(std::size_t n_points) {
    require_grid(n_points);
    const long long half = static_cast<long long>(n_points) / 2;
    DyadicPartition part;
    part.blocks.push_back({0, 1});            // {0}
    part.blocks.push_back({-half, -half + 1});  // {-N/2}
    // positive blocks [2^k, 2^{k+1})
    for (long long lo = 1; lo < half; lo *= 2) part.blocks.push_back({lo, std::min(2 * lo, half)});
    // reflected blocks -[2^k, 2^{k+1}) = [1-2^{k+1}, 1-2^k)
    for (long long lo = 1; lo < half; lo *= 2)
        part.blocks.push_back({1 - std::min(2 * lo, half), 1 - lo});
    return part;
}

int block_index_of(const DyadicPartition& partition, long long k) {
    for (std::size_t i = 0; i < partition.blocks.size(); ++i)
        if (partition.blocks[i].contains(k)) return static_cast<int>(i);
    return -1;
}

Spectrum project(const Spectrum& spectrum, const FrequencyInterval& interval) {
    if (interval.lo >= interval.hi)
        throw std::invalid_argument("project: empty frequency interval");
    if (interval.lo < spectrum.k_min() || interval.hi > spectrum.k_max())
        throw std::invalid_argument("project: interval outside [-N/2, N/2)");
    Spectrum out(spectrum.n_points, spectrum.dim_shape);
    const std::size_t d = spectrum.dim();
    for (long long k = interval.lo; k < interval.hi; ++k)
        for (std::size_t c = 0; c < d; ++c) out.at(k, c) = spectrum.at(k, c);
    return out;
}

TorusSignal project(const TorusSignal& signal, const FrequencyInterval& interval) {
    return idft(project(dft(signal), interval));
}

TorusSignal translate(const TorusSignal& signal, long long shift) {
    signal.validate();
    const long long n = static_cast<long long>(signal.n_points);
    const std::size_t d = signal.dim();
    TorusSignal out(signal.n_points, signal.dim_shape);
    for (long long j = 0; j < n; ++j) {
        long long src = ((j - shift) % n + n) % n;
        for (std::size_t c = 0; c < d; ++c)
            out.samples[static_cast<std::size_t>(j) * d + c] =
                signal.samples[static_cast<std::size_t>(src) * d + c];
    }
    return out;
}

void write_csv(const TorusSignal& signal, std::ostream& os) {
    signal.validate();
    os << "sample_index";
    for (std::size_t a = 0; a < signal.dim_shape.size(); ++a) os << ",component_index_" << a;
    os << ",re,im\n";
    const std::size_t d = signal.dim();
    for (std::size_t j = 0; j < signal.n_points; ++j) {
        for (std::size_t c = 0; c < d; ++c) {
            os << j;
            std::size_t rem = c;
            std::vector<std::size_t> idx(signal.dim_shape.size());
            for (std::size_t a = signal.dim_shape.size(); a-- > 0;) {
                idx[a] = rem % signal.dim_shape[a];
                rem /= signal.dim_shape[a];
            }
            for (std::size_t a = 0; a < idx.size(); ++a) os << "," << idx[a];
            const cplx& z = signal.samples[j * d + c];
            os.precision(17);
            os << "," << z.real() << "," << z.imag() << "\n";
        }
    }
}

TorusSignal read_csv_signal(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("signal CSV: missing header");
    std::size_t n_index_cols = 0;
    {
        std::stringstream hs(header);
        std::string col;
        std::vector<std::string> cols;
        while (std::getline(hs, col, ',')) cols.push_back(col);
        if (cols.size() < 3 || cols.front() != "sample_index")
            throw std::runtime_error("signal CSV: unexpected header");
        n_index_cols = cols.size() - 3;
    }
    struct Row {
        std::size_t sample;
        std::vector<std::size_t> comp;
        cplx z;
    };
    std::vector<Row> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string field;
        Row r;
        std::getline(ls, field, ',');
        r.sample = std::stoull(field);
        for (std::size_t a = 0; a < n_index_cols; ++a) {
            std::getline(ls, field, ',');
            r.comp.push_back(std::stoull(field));
        }
        std::getline(ls, field, ',');
        double re = std::stod(field);
        std::getline(ls, field, ',');
        double im = std::stod(field);
        r.z = cplx(re, im);
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw std::runtime_error("signal CSV: no rows");
    std::size_t n = 0;
    std::vector<std::size_t> shape(n_index_cols, 0);
    for (const auto& r : rows) {
        n = std::max(n, r.sample + 1);
        for (std::size_t a = 0; a < n_index_cols; ++a) shape[a] = std::max(shape[a], r.comp[a] + 1);
    }
    if (shape.empty()) shape = {1};
    TorusSignal sig(n, shape);
    const std::size_t d = sig.dim();
    for (const auto& r : rows) {
        std::size_t c = 0;
        for (std::size_t a = 0; a < r.comp.size(); ++a) c = c * shape[a] + r.comp[a];
        if (r.comp.empty()) c = 0;
        sig.samples[r.sample * d + c] = r.z;
    }
    return sig;
}

std::string to_json(const TorusSignal& signal) {
    signal.validate();
    nlohmann::json j;
    j["n_points"] = signal.n_points;
    j["dim_shape"] = signal.dim_shape;
    std::vector<double> data;
    data.reserve(signal.samples.size() * 2);
    for (const cplx& z : signal.samples) {
        data.push_back(z.real());
        data.push_back(z.imag());
    }
    j["data"] = std::move(data);
    return j.dump();
}

TorusSignal signal_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TorusSignal sig(j.at("n_points").get<std::size_t>(),
                    j.at("dim_shape").get<std::vector<std::size_t>>());
    const auto& data = j.at("data");
    if (data.size() != 2 * sig.samples.size())
        throw std::runtime_error("signal JSON: data length mismatch");
    for (std::size_t i = 0; i < sig.samples.size(); ++i)
        sig.samples[i] = cplx(data[2 * i].get<double>(), data[2 * i + 1].get<double>());
    return sig;
}

} // namespace varmult
