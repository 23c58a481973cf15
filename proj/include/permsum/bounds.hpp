#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "permsum/matrix.hpp"

namespace permsum {

// One evaluated tail bound. probability_bound is returned raw (it may exceed
// 1 near the origin); consumers cap it at 1. Threshold-form families also
// report the deviation threshold on the Z scale and its sqrt/linear split.
struct bound_evaluation {
    std::string family;
    double input = 0.0;  // t for probability forms, x for threshold forms
    double probability_bound = 0.0;
    std::optional<double> z_threshold;
    std::optional<std::pair<double, double>> threshold_split;
    std::map<std::string, double> constants;
    std::string note;

    double capped() const { return probability_bound < 1.0 ? probability_bound : 1.0; }
};

// Classical Bernstein inequality for sums with variance proxy v and scale c.
// Statistic form: P(S >= sqrt(2 v x) + c x) <= exp(-x).
// Probability form: P(S >= t) <= exp(-t^2 / (2 (v + c t))).
bound_evaluation bernstein_classical_stat(double v, double c, double x);
bound_evaluation bernstein_classical_prob(double v, double c, double t);

// Chatterjee's bound for permuted sums with non-negative entries:
// P(|Z - E Z| >= t) <= 2 exp(-t^2 / (4 E Z + 2 t)) when max a <= 1, and the
// rescaled form 2 exp(-t^2 / (4 max_a E Z + 2 max_a t)) otherwise.
bound_evaluation chatterjee_bound(double mean_z, double max_a, double t);

// Bercu-Delyon-Rio: P(|Z - E Z| >= t) <= 4 exp(-t^2 / (16 (theta V + m_a t / 3))),
// with V = (1/n) sum a^2 and m_a = max |a|.
bound_evaluation bdr_bound(double v_second_moment, double max_abs, double t);

// Square-root concentration around the median, non-negative entries:
// P(sqrt(Z) >= sqrt(med Z) + t sqrt(max_a)) <= 2 exp(-t^2/16), same rate on
// the lower side, 4 exp(-t^2/16) two-sided. z_threshold is on the Z scale
// (clamped at 0 on the lower side).
enum class tail_side { upper, lower, two_sided };
bound_evaluation sqrt_median_bound(double med_z, double max_a, double t, tail_side side);

// Median-centered bound, non-negative entries, med_sq = med(sum a^2 over the
// permutation): P(|Z - med Z| > sqrt(med_sq x) + x max_a) <= 8 exp(-x/16).
// Note the strict inequality in the event.
bound_evaluation median_bound_pos(double med_sq, double max_a, double x);

// Mean-centered bounds, non-negative entries, V = (1/n) sum a^2, M = max a.
// Threshold form: P(|Z - E Z| >= 2 sqrt(V x) + M x) <= 8 e^{1/16} exp(-x/16).
// Probability form: 8 e^{1/16} exp(-t^2 / (16 (4 V + 2 M t))).
bound_evaluation mean_bound_pos_threshold(double v_second_moment, double max_a, double x);
bound_evaluation mean_bound_pos_prob(double v_second_moment, double max_a, double t);

// Mean-centered bounds for arbitrary signs.
// Threshold form: P(|Z - E Z| >= 2 sqrt(2 V x) + 2 max|a| x) <= 16 e^{1/16} exp(-x/16).
// Variance probability form: 16 e^{1/16} exp(-t^2 / (256 (Var Z + max|a| t))).
// Centered-coefficient form: 16 e^{1/16} exp(-t^2 / (64 (4 (1/n) sum d^2 + max|d| t))).
bound_evaluation mean_bound_general_threshold(double v_second_moment, double max_abs, double x);
bound_evaluation mean_bound_general_prob_var(double var_z, double max_abs, double t);
bound_evaluation mean_bound_general_prob_d(double d_mean_square, double max_abs_d, double t);

// Deviations measured in sqrt(Var Z) units: with ratio = max|d|/sqrt((1/n) sum d^2),
// P(|Z - E Z| >= x sqrt(Var Z)) <= 16 e^{1/16} exp(-x^2 / (256 (1 + ratio x))).
bound_evaluation gaussian_tail_form(double d_ratio, double x);

// h1(u) = 1 + u - sqrt(1 + 2u), the Bernstein rate function of the threshold
// forms, and its inverse h1_inv(v) = v + sqrt(2v).
double h1(double u);
double h1_inv(double v);

// Asymptotic-normality diagnostics on the centered matrix d.
// Moment ratio (r > 2): (1/n) sum |d|^r / ((1/n) sum d^2)^{r/2}.
double hoeffding_condition_r(const coefficient_matrix& d, double r);
// Max ratio: max|d| / sqrt((1/n) sum d^2).
double hoeffding_condition_max(const coefficient_matrix& d);
// Lindeberg sum: sum over entries of (d/dbar)^2 1{|d/dbar| > eps}, dbar^2 = (1/n) sum d^2.
double lindeberg_sum(const coefficient_matrix& d, double eps);

} // namespace permsum
