#include "permsum/moments.hpp"

#include <algorithm>
#include <cmath>

#include "permsum/errors.hpp"

namespace permsum {

coefficient_matrix hoeffding_centering(const coefficient_matrix& a) {
    const std::size_t n = a.size();
    std::vector<double> row(n, 0.0), col(n, 0.0);
    double grand = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            row[i] += a(i, j);
            col[j] += a(i, j);
            grand += a(i, j);
        }
    const double nn = static_cast<double>(n);
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i * n + j] = a(i, j) - row[i] / nn - col[j] / nn + grand / (nn * nn);
    return coefficient_matrix(n, std::move(d));
}

matrix_moments compute_matrix_moments(const coefficient_matrix& a) {
    const std::size_t n = a.size();
    const double nn = static_cast<double>(n);
    matrix_moments m;
    double sum = 0.0, sum_sq = 0.0;
    for (double v : a.entries()) {
        sum += v;
        sum_sq += v * v;
        m.max_abs = std::max(m.max_abs, std::fabs(v));
    }
    m.mean_z = sum / nn;
    m.v_second_moment = sum_sq / nn;

    const coefficient_matrix d = hoeffding_centering(a);
    double d_sq = 0.0;
    for (double v : d.entries()) {
        d_sq += v * v;
        m.max_abs_d = std::max(m.max_abs_d, std::fabs(v));
    }
    m.var_z = d_sq / (nn - 1.0);
    m.degenerate = (d_sq == 0.0);
    m.d_ratio = m.degenerate ? 0.0 : m.max_abs_d / std::sqrt(d_sq / nn);
    return m;
}

median_interval distribution_median_interval(const perm_sum_distribution& d) {
    if (d.values.empty()) throw invalid_parameter_error("empty distribution");
    std::vector<double> v(d.values);
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    return median_interval{v[(m - 1) / 2], v[m / 2]};
}

double distribution_median(const perm_sum_distribution& d) {
    return distribution_median_interval(d).midpoint();
}

double median_of_squared_sum(const coefficient_matrix& a, const squared_sum_median_mode& mode) {
    const coefficient_matrix sq = entrywise_square(a);
    const perm_sum_distribution d =
        mode.exact ? exact_distribution(sq) : sample_distribution(sq, mode.b, mode.seed);
    return distribution_median(d);
}

mean_median_gap_result mean_median_gap(const coefficient_matrix& a,
                                       const perm_sum_distribution& d) {
    const matrix_moments m = compute_matrix_moments(a);
    mean_median_gap_result r;
    r.gap = std::fabs(m.mean_z - distribution_median(d));
    r.sqrt_var = std::sqrt(m.var_z);
    r.sqrt_two_v = std::sqrt(2.0 * m.v_second_moment);
    r.within_sqrt_var = r.gap <= r.sqrt_var;
    r.within_sqrt_two_v = r.gap <= r.sqrt_two_v;
    return r;
}

} // namespace permsum
