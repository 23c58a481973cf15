#include "permsum/matrix.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "permsum/errors.hpp"

namespace permsum {

coefficient_matrix::coefficient_matrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 2) throw invalid_size_error("coefficient matrix needs n >= 2");
    if (entries_.size() != n_ * n_)
        throw dimension_error("expected " + std::to_string(n_ * n_) + " entries, got " +
                              std::to_string(entries_.size()));
    for (double v : entries_)
        if (!std::isfinite(v)) throw invalid_parameter_error("matrix entries must be finite");
}

coefficient_matrix coefficient_matrix::constant(std::size_t n, double value) {
    return coefficient_matrix(n, std::vector<double>(n * n, value));
}

bool coefficient_matrix::non_negative() const {
    for (double v : entries_)
        if (v < 0.0) return false;
    return true;
}

double coefficient_matrix::max_abs() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::fabs(v));
    return m;
}

double permuted_sum(const coefficient_matrix& a, const permutation& p) {
    if (p.size() != a.size())
        throw dimension_error("permutation size " + std::to_string(p.size()) +
                              " does not match matrix size " + std::to_string(a.size()));
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a(i, p(i));
    return s;
}

coefficient_matrix entrywise_square(const coefficient_matrix& a) {
    std::vector<double> sq(a.entries());
    for (double& v : sq) v *= v;
    return coefficient_matrix(a.size(), std::move(sq));
}

coefficient_matrix parse_matrix_csv(std::istream& in) {
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
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &pos);
            } catch (const std::exception&) {
                throw parse_error("line " + std::to_string(lineno) + ": not a number: '" + cell + "'");
            }
            while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
            if (pos != cell.size())
                throw parse_error("line " + std::to_string(lineno) + ": not a number: '" + cell + "'");
            row.push_back(v);
        }
        if (row.empty())
            throw parse_error("line " + std::to_string(lineno) + ": empty row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty matrix input");
    const std::size_t n = rows.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw parse_error("line " + std::to_string(i + 1) + ": expected " + std::to_string(n) +
                              " fields, got " + std::to_string(rows[i].size()));
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    try {
        return coefficient_matrix(n, std::move(entries));
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid matrix: ") + e.what());
    }
}

coefficient_matrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_matrix_csv(in);
}

void write_matrix_csv(const coefficient_matrix& a, std::ostream& out) {
    out.precision(17);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j) out << ',';
            out << a(i, j);
        }
        out << '\n';
    }
}

} // namespace permsum
