#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace varmult {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n);

// Complex samples on an N-point uniform grid of the torus. Each sample is a
// vector in a finite-dimensional coordinate space described by dim_shape;
// storage is row-major [sample][component].
struct TorusSignal {
    std::size_t n_points = 0;
    std::vector<std::size_t> dim_shape;
    std::vector<cplx> samples;

    TorusSignal() = default;
    TorusSignal(std::size_t n, std::vector<std::size_t> shape);

    std::size_t dim() const;
    cplx& at(std::size_t sample, std::size_t component);
    const cplx& at(std::size_t sample, std::size_t component) const;
    void validate() const;
};

// Fourier coefficients indexed by frequency k in [-N/2, N/2), same coordinate
// shape as the signal. coeffs is stored in ascending frequency order.
struct Spectrum {
    std::size_t n_points = 0;
    std::vector<std::size_t> dim_shape;
    std::vector<cplx> coeffs;

    Spectrum() = default;
    Spectrum(std::size_t n, std::vector<std::size_t> shape);

    std::size_t dim() const;
    long long k_min() const { return -static_cast<long long>(n_points) / 2; }
    long long k_max() const { return static_cast<long long>(n_points) / 2; }  // exclusive
    cplx& at(long long k, std::size_t component);
    const cplx& at(long long k, std::size_t component) const;
};

// Half-open frequency interval [lo, hi) with lo < hi inside [-N/2, N/2].
struct FrequencyInterval {
    long long lo = 0;
    long long hi = 0;

    long long length() const { return hi - lo; }
    bool contains(long long k) const { return lo <= k && k < hi; }
    bool contains(const FrequencyInterval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool disjoint(const FrequencyInterval& other) const { return hi <= other.lo || other.hi <= lo; }
};

struct DyadicPartition {
    std::vector<FrequencyInterval> blocks;
};

// Forward transform with 1/N normalisation: spectrum[k] = (1/N) sum_j f_j e^{-2pi i kj/N},
// so Parseval reads (1/N) sum_j |f_j|^2 = sum_k |spectrum[k]|^2 componentwise.
Spectrum dft(const TorusSignal& signal);
TorusSignal idft(const Spectrum& spectrum);

// Blocks {0}, {-N/2} and the reflected pairs of [2^k, 2^{k+1}), k = 0..log2(N)-2,
// tiling [-N/2, N/2) exactly.
DyadicPartition dyadic_partition(std::size_t n_points);

// Index of the partition block containing frequency k, or -1.
int block_index_of(const DyadicPartition& partition, long long k);

TorusSignal project(const TorusSignal& signal, const FrequencyInterval& interval);
Spectrum project(const Spectrum& spectrum, const FrequencyInterval& interval);

// Cyclic shift: result[j] = samples[(j - shift) mod N].
TorusSignal translate(const TorusSignal& signal, long long shift);

// CSV columns: sample_index, component_index..., re, im.
void write_csv(const TorusSignal& signal, std::ostream& os);
TorusSignal read_csv_signal(std::istream& is);

// JSON container {n_points, dim_shape, data:[re,im,...]}.
std::string to_json(const TorusSignal& signal);
TorusSignal signal_from_json(const std::string& text);

} // namespace varmult
