#include "varmult/symbol.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace varmult {

Symbol::Symbol(std::size_t n, std::size_t d) : n_points(n), dim(d) {
    if (!is_power_of_two(n) || n < 8)
        throw std::invalid_argument("Symbol: n_points must be a power of two >= 8");
    if (d == 0) throw std::invalid_argument("Symbol: dimension must be positive");
    entries.assign(n, Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
}

void Symbol::validate() const {
    if (!is_power_of_two(n_points) || n_points < 8)
        throw std::invalid_argument("Symbol: n_points must be a power of two >= 8");
    if (entries.size() != n_points)
        throw std::invalid_argument("Symbol: one matrix per frequency required");
    for (const auto& m : entries)
        if (m.rows() != static_cast<Eigen::Index>(dim) || m.cols() != static_cast<Eigen::Index>(dim))
            throw std::invalid_argument("Symbol: matrices must be uniformly dim x dim");
}

Symbol scalar_symbol(std::size_t n_points, const std::vector<cplx>& values) {
    if (values.size() != n_points)
        throw std::invalid_argument("scalar_symbol: one value per frequency required");
    Symbol s(n_points, 1);
    for (std::size_t i = 0; i < n_points; ++i) s.entries[i](0, 0) = values[i];
    return s;
}

Symbol identity_symbol(std::size_t n_points, std::size_t dim) {
    Symbol s(n_points, dim);
    for (auto& m : s.entries)
        m = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    return s;
}

Symbol indicator_symbol(std::size_t n_points, std::size_t dim, const FrequencyInterval& interval) {
    Symbol s(n_points, dim);
    for (long long k = s.k_min(); k < s.k_max(); ++k)
        if (interval.contains(k))
            s.at(k) = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    return s;
}

Symbol operator+(const Symbol& a, const Symbol& b) {
    if (a.n_points != b.n_points || a.dim != b.dim)
        throw std::invalid_argument("Symbol addition: shape mismatch");
    Symbol s = a;
    for (std::size_t i = 0; i < s.entries.size(); ++i) s.entries[i] += b.entries[i];
    return s;
}

Symbol operator*(cplx scale, const Symbol& sym) {
    Symbol s = sym;
    for (auto& m : s.entries) m *= scale;
    return s;
}

std::string to_json(const Symbol& symbol) {
    symbol.validate();
    nlohmann::json j;
    j["n_points"] = symbol.n_points;
    j["dim"] = symbol.dim;
    std::vector<double> data;
    data.reserve(symbol.n_points * symbol.dim * symbol.dim * 2);
    for (const auto& m : symbol.entries)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                data.push_back(m(r, c).real());
                data.push_back(m(r, c).imag());
            }
    j["data"] = std::move(data);
    return j.dump();
}

Symbol symbol_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Symbol s(j.at("n_points").get<std::size_t>(), j.at("dim").get<std::size_t>());
    const auto& data = j.at("data");
    const std::size_t d = s.dim;
    if (data.size() != s.n_points * d * d * 2)
        throw std::runtime_error("symbol JSON: data length mismatch");
    std::size_t pos = 0;
    for (auto& m : s.entries)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                m(r, c) = cplx(data[pos].get<double>(), data[pos + 1].get<double>());
                pos += 2;
            }
    return s;
}

} // namespace varmult
