#include "permsum/paired_sample.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "permsum/errors.hpp"

namespace permsum {

paired_sample make_paired_sample(std::vector<point> first, std::vector<point> second) {
    if (first.size() != second.size())
        throw dimension_error("coordinate blocks must have the same length");
    if (first.size() < 2) throw invalid_size_error("paired sample needs n >= 2");
    const std::size_t d1 = first.front().size(), d2 = second.front().size();
    if (d1 == 0 || d2 == 0) throw dimension_error("points must have at least one coordinate");
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (first[i].size() != d1 || second[i].size() != d2)
            throw dimension_error("ragged point dimensions at row " + std::to_string(i + 1));
        for (double v : first[i])
            if (!std::isfinite(v)) throw invalid_parameter_error("coordinates must be finite");
        for (double v : second[i])
            if (!std::isfinite(v)) throw invalid_parameter_error("coordinates must be finite");
    }
    return paired_sample{std::move(first), std::move(second)};
}

paired_sample parse_paired_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && in.eof()) break;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t pos = 0;
                const double v = std::stod(cell, &pos);
                while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos])))
                    ++pos;
                if (pos != cell.size()) throw std::invalid_argument(cell);
                row.push_back(v);
            } catch (const std::exception&) {
                throw parse_error("line " + std::to_string(lineno) + ": not a number: '" + cell +
                                  "'");
            }
        }
        if (row.empty()) throw parse_error("line " + std::to_string(lineno) + ": empty row");
        if (row.size() % 2 != 0)
            throw parse_error("line " + std::to_string(lineno) +
                              ": need an even number of columns (k for X1, k for X2)");
        if (!rows.empty() && row.size() != rows.front().size())
            throw parse_error("line " + std::to_string(lineno) + ": expected " +
                              std::to_string(rows.front().size()) + " fields, got " +
                              std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty paired-sample input");
    const std::size_t k = rows.front().size() / 2;
    std::vector<point> first, second;
    for (const auto& r : rows) {
        first.emplace_back(r.begin(), r.begin() + k);
        second.emplace_back(r.begin() + k, r.end());
    }
    try {
        return make_paired_sample(std::move(first), std::move(second));
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid paired sample: ") + e.what());
    }
}

paired_sample read_paired_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_paired_csv(in);
}

namespace {

double param_or(const paired_generator_spec& spec, const std::string& key, double fallback) {
    const auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

std::size_t symbol_count(const paired_generator_spec& spec) {
    const double k = param_or(spec, "k", 0.0);
    if (!(k >= 2.0) || k != std::floor(k))
        throw invalid_parameter_error("generator '" + spec.name +
                                      "' needs an integer symbol count k >= 2");
    return static_cast<std::size_t>(k);
}

} // namespace

paired_sample generate_paired_sample(const paired_generator_spec& spec, std::size_t n,
                                     splitmix64& rng) {
    if (n < 2) throw invalid_size_error("paired sample needs n >= 2");
    std::vector<point> first(n), second(n);
    if (spec.name == "independent-uniform") {
        for (std::size_t i = 0; i < n; ++i) {
            first[i] = {rng.uniform01()};
            second[i] = {rng.uniform01()};
        }
    } else if (spec.name == "independent-discrete") {
        const std::size_t k = symbol_count(spec);
        for (std::size_t i = 0; i < n; ++i) {
            first[i] = {static_cast<double>(rng.below(k))};
            second[i] = {static_cast<double>(rng.below(k))};
        }
    } else if (spec.name == "coupled-discrete") {
        const std::size_t k = symbol_count(spec);
        for (std::size_t i = 0; i < n; ++i) {
            first[i] = {static_cast<double>(rng.below(k))};
            second[i] = first[i];
        }
    } else if (spec.name == "noisy-coupled-discrete") {
        const std::size_t k = symbol_count(spec);
        const double eps = param_or(spec, "eps", 0.0);
        if (!(eps >= 0.0 && eps <= 1.0))
            throw invalid_parameter_error("eps must lie in [0,1]");
        for (std::size_t i = 0; i < n; ++i) {
            first[i] = {static_cast<double>(rng.below(k))};
            second[i] = rng.uniform01() < eps ? point{static_cast<double>(rng.below(k))} : first[i];
        }
    } else {
        throw invalid_parameter_error("unknown paired-sample generator '" + spec.name + "'");
    }
    return paired_sample{std::move(first), std::move(second)};
}

bool generator_is_independent(const paired_generator_spec& spec) {
    return spec.name == "independent-uniform" || spec.name == "independent-discrete";
}

} // namespace permsum
