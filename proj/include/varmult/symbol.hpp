#pragma once

#include "varmult/opfamily.hpp"
#include "varmult/torus.hpp"

#include <string>

namespace varmult {

// Operator-valued multiplier symbol: one d x d matrix per frequency
// k in [-N/2, N/2), stored in ascending frequency order.
struct Symbol {
    std::size_t n_points = 0;
    std::size_t dim = 1;
    std::vector<Matrix> entries;

    Symbol() = default;
    Symbol(std::size_t n, std::size_t d);

    long long k_min() const { return -static_cast<long long>(n_points) / 2; }
    long long k_max() const { return static_cast<long long>(n_points) / 2; }
    Matrix& at(long long k) { return entries[static_cast<std::size_t>(k - k_min())]; }
    const Matrix& at(long long k) const { return entries[static_cast<std::size_t>(k - k_min())]; }
    void validate() const;
};

Symbol scalar_symbol(std::size_t n_points, const std::vector<cplx>& values);
Symbol identity_symbol(std::size_t n_points, std::size_t dim);
Symbol indicator_symbol(std::size_t n_points, std::size_t dim, const FrequencyInterval& interval);

Symbol operator+(const Symbol& a, const Symbol& b);
Symbol operator*(cplx scale, const Symbol& s);

std::string to_json(const Symbol& symbol);
Symbol symbol_from_json(const std::string& text);

} // namespace varmult
