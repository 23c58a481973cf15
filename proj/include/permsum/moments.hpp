#pragma once

#include <cstdint>
#include <optional>

#include "permsum/distribution.hpp"
#include "permsum/matrix.hpp"

namespace permsum {

// Closed-form moments of Z under a uniform random permutation.
//   mean_z  = (1/n) sum_{i,j} a_{i,j}
//   var_z   = 1/(n-1) sum_{i,j} d_{i,j}^2   (d = doubly centered a)
//   v_second_moment = (1/n) sum_{i,j} a_{i,j}^2
//   max_abs = max |a_{i,j}|,  max_abs_d = max |d_{i,j}|
//   d_ratio = max|d| / sqrt((1/n) sum d^2), 0 for a degenerate (constant-sum) matrix
struct matrix_moments {
    double mean_z = 0.0;
    double var_z = 0.0;
    double v_second_moment = 0.0;
    double max_abs = 0.0;
    double max_abs_d = 0.0;
    double d_ratio = 0.0;
    bool degenerate = false;
};

// Doubly centered coefficients: d_{i,j} = a_{i,j} - rowmean_i - colmean_j + grandmean.
coefficient_matrix hoeffding_centering(const coefficient_matrix& a);

matrix_moments compute_matrix_moments(const coefficient_matrix& a);

// Sample median as the midpoint of the lower and upper medians, so both
// P(Z >= med) >= 1/2 and P(Z <= med) >= 1/2 hold exactly.
struct median_interval {
    double lower = 0.0;
    double upper = 0.0;
    double midpoint() const { return 0.5 * (lower + upper); }
};

median_interval distribution_median_interval(const perm_sum_distribution& d);
double distribution_median(const perm_sum_distribution& d);

// Median of sum_i a_{i,p(i)}^2, the centering statistic of the median-form
// bounds. Exact mode enumerates; Monte Carlo mode samples b permutations.
struct squared_sum_median_mode {
    bool exact = true;
    std::uint64_t b = 0;
    std::uint64_t seed = 0;
};

double median_of_squared_sum(const coefficient_matrix& a, const squared_sum_median_mode& mode);

// Diagnostic for |E Z - med Z| against its two guaranteed envelopes.
struct mean_median_gap_result {
    double gap = 0.0;
    double sqrt_var = 0.0;        // sqrt(Var Z)
    double sqrt_two_v = 0.0;      // sqrt(2 V)
    bool within_sqrt_var = false;
    bool within_sqrt_two_v = false;
};

mean_median_gap_result mean_median_gap(const coefficient_matrix& a, const perm_sum_distribution& d);

} // namespace permsum
