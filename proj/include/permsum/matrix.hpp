#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "permsum/permutation.hpp"

namespace permsum {

// Square matrix of coefficients a_{i,j}; the object every permuted sum
// Z = sum_i a_{i,p(i)} is built from. Entries must be finite, n >= 2.
class coefficient_matrix {
public:
    coefficient_matrix(std::size_t n, std::vector<double> entries);

    static coefficient_matrix constant(std::size_t n, double value);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

    bool non_negative() const;
    double max_abs() const;

private:
    std::size_t n_;
    std::vector<double> entries_;
};

double permuted_sum(const coefficient_matrix& a, const permutation& p);

coefficient_matrix entrywise_square(const coefficient_matrix& a);

// CSV: n rows of n comma-separated decimal numbers, no header.
coefficient_matrix parse_matrix_csv(std::istream& in);
coefficient_matrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const coefficient_matrix& a, std::ostream& out);

} // namespace permsum
