#include "permsum/bounds.hpp"

#include <cmath>

#include "permsum/constants.hpp"
#include "permsum/errors.hpp"

namespace permsum {

namespace {

void require_nonneg(double v, const char* name) {
    if (!(v >= 0.0))
        throw invalid_parameter_error(std::string(name) + " must be non-negative");
}

// Shared shape of the exponential forms: prefactor * exp(-num/den), with the
// den == 0 cases resolved by the all-mass-at-center limit.
double ratio_bound(double prefactor, double num, double den) {
    if (den == 0.0) return num == 0.0 ? prefactor : 0.0;
    return prefactor * std::exp(-num / den);
}

bound_evaluation degenerate_trivial(const char* family, double x) {
    bound_evaluation e;
    e.family = family;
    e.input = x;
    e.probability_bound = 1.0;
    e.z_threshold = 0.0;
    e.note = "degenerate: zero matrix, all mass at the center";
    return e;
}

} // namespace

bound_evaluation bernstein_classical_stat(double v, double c, double x) {
    if (!(v > 0.0)) throw invalid_parameter_error("variance proxy v must be positive");
    require_nonneg(c, "scale c");
    require_nonneg(x, "x");
    bound_evaluation e;
    e.family = "bernstein-classical-stat";
    e.input = x;
    const double sqrt_part = std::sqrt(2.0 * v * x);
    const double lin_part = c * x;
    e.z_threshold = sqrt_part + lin_part;
    e.threshold_split = {sqrt_part, lin_part};
    e.probability_bound = std::exp(-x);
    return e;
}

bound_evaluation bernstein_classical_prob(double v, double c, double t) {
    if (!(v > 0.0)) throw invalid_parameter_error("variance proxy v must be positive");
    require_nonneg(c, "scale c");
    require_nonneg(t, "t");
    bound_evaluation e;
    e.family = "bernstein-classical-prob";
    e.input = t;
    e.z_threshold = t;
    e.probability_bound = ratio_bound(1.0, t * t, 2.0 * (v + c * t));
    return e;
}

bound_evaluation chatterjee_bound(double mean_z, double max_a, double t) {
    require_nonneg(mean_z, "mean_z");
    require_nonneg(max_a, "max_a");
    require_nonneg(t, "t");
    bound_evaluation e;
    e.family = "chatterjee";
    e.input = t;
    e.z_threshold = t;
    if (max_a <= 1.0) {
        e.probability_bound = ratio_bound(2.0, t * t, 4.0 * mean_z + 2.0 * t);
        e.note = "unit-range form";
    } else {
        e.probability_bound = ratio_bound(2.0, t * t, 4.0 * max_a * mean_z + 2.0 * max_a * t);
        e.note = "rescaled form (max_a > 1)";
    }
    return e;
}

bound_evaluation bdr_bound(double v_second_moment, double max_abs, double t) {
    require_nonneg(v_second_moment, "V");
    require_nonneg(max_abs, "max_abs");
    require_nonneg(t, "t");
    if (v_second_moment == 0.0 && max_abs == 0.0)
        throw invalid_parameter_error("V and max_abs cannot both be zero");
    const double theta = constants::theta();
    bound_evaluation e;
    e.family = "bdr";
    e.input = t;
    e.z_threshold = t;
    e.probability_bound =
        ratio_bound(4.0, t * t, 16.0 * (theta * v_second_moment + max_abs * t / 3.0));
    e.constants["theta"] = theta;
    return e;
}

bound_evaluation sqrt_median_bound(double med_z, double max_a, double t, tail_side side) {
    require_nonneg(med_z, "med_z");
    require_nonneg(max_a, "max_a");
    require_nonneg(t, "t");
    const char* name = side == tail_side::upper   ? "sqrt-median-upper"
                       : side == tail_side::lower ? "sqrt-median-lower"
                                                  : "sqrt-median-two-sided";
    if (max_a == 0.0) return degenerate_trivial(name, t);
    bound_evaluation e;
    e.family = name;
    e.input = t;
    const double root = std::sqrt(med_z);
    const double step = t * std::sqrt(max_a);
    if (side == tail_side::lower) {
        const double lo = root - step;
        e.z_threshold = lo > 0.0 ? lo * lo : 0.0;
    } else {
        e.z_threshold = (root + step) * (root + step);
    }
    e.probability_bound = (side == tail_side::two_sided ? 4.0 : 2.0) * std::exp(-t * t / 16.0);
    return e;
}

bound_evaluation median_bound_pos(double med_sq, double max_a, double x) {
    require_nonneg(med_sq, "med_sq");
    require_nonneg(max_a, "max_a");
    require_nonneg(x, "x");
    if (max_a == 0.0) return degenerate_trivial("median-pos", x);
    bound_evaluation e;
    e.family = "median-pos";
    e.input = x;
    const double sqrt_part = std::sqrt(med_sq * x);
    const double lin_part = x * max_a;
    e.z_threshold = sqrt_part + lin_part;
    e.threshold_split = {sqrt_part, lin_part};
    e.probability_bound = 8.0 * std::exp(-x / 16.0);
    e.note = "strict deviation: P(|Z - med Z| > threshold)";
    return e;
}

bound_evaluation mean_bound_pos_threshold(double v_second_moment, double max_a, double x) {
    require_nonneg(v_second_moment, "V");
    require_nonneg(max_a, "max_a");
    require_nonneg(x, "x");
    if (max_a == 0.0 && v_second_moment == 0.0) return degenerate_trivial("mean-pos", x);
    bound_evaluation e;
    e.family = "mean-pos";
    e.input = x;
    const double sqrt_part = 2.0 * std::sqrt(v_second_moment * x);
    const double lin_part = max_a * x;
    e.z_threshold = sqrt_part + lin_part;
    e.threshold_split = {sqrt_part, lin_part};
    e.probability_bound = constants::pos_prefactor() * std::exp(-x / 16.0);
    e.constants["prefactor"] = constants::pos_prefactor();
    return e;
}

bound_evaluation mean_bound_pos_prob(double v_second_moment, double max_a, double t) {
    require_nonneg(v_second_moment, "V");
    require_nonneg(max_a, "max_a");
    require_nonneg(t, "t");
    bound_evaluation e;
    e.family = "mean-pos-prob";
    e.input = t;
    e.z_threshold = t;
    e.probability_bound = ratio_bound(constants::pos_prefactor(), t * t,
                                      16.0 * (4.0 * v_second_moment + 2.0 * max_a * t));
    e.constants["prefactor"] = constants::pos_prefactor();
    return e;
}

bound_evaluation mean_bound_general_threshold(double v_second_moment, double max_abs, double x) {
    require_nonneg(v_second_moment, "V");
    require_nonneg(max_abs, "max_abs");
    require_nonneg(x, "x");
    if (max_abs == 0.0 && v_second_moment == 0.0) return degenerate_trivial("mean-general", x);
    bound_evaluation e;
    e.family = "mean-general";
    e.input = x;
    const double sqrt_part = 2.0 * std::sqrt(2.0 * v_second_moment * x);
    const double lin_part = 2.0 * max_abs * x;
    e.z_threshold = sqrt_part + lin_part;
    e.threshold_split = {sqrt_part, lin_part};
    e.probability_bound = constants::gen_prefactor() * std::exp(-x / 16.0);
    e.constants["prefactor"] = constants::gen_prefactor();
    return e;
}

bound_evaluation mean_bound_general_prob_var(double var_z, double max_abs, double t) {
    require_nonneg(var_z, "var_z");
    require_nonneg(max_abs, "max_abs");
    require_nonneg(t, "t");
    bound_evaluation e;
    e.family = "mean-general-prob";
    e.input = t;
    e.z_threshold = t;
    e.probability_bound =
        ratio_bound(constants::gen_prefactor(), t * t, 256.0 * (var_z + max_abs * t));
    e.constants["prefactor"] = constants::gen_prefactor();
    return e;
}

bound_evaluation mean_bound_general_prob_d(double d_mean_square, double max_abs_d, double t) {
    require_nonneg(d_mean_square, "d_mean_square");
    require_nonneg(max_abs_d, "max_abs_d");
    require_nonneg(t, "t");
    bound_evaluation e;
    e.family = "general-d-form";
    e.input = t;
    e.z_threshold = t;
    e.probability_bound = ratio_bound(constants::gen_prefactor(), t * t,
                                      64.0 * (4.0 * d_mean_square + max_abs_d * t));
    e.constants["prefactor"] = constants::gen_prefactor();
    return e;
}

bound_evaluation gaussian_tail_form(double d_ratio, double x) {
    require_nonneg(d_ratio, "d_ratio");
    require_nonneg(x, "x");
    bound_evaluation e;
    e.family = "gaussian-tail-form";
    e.input = x;
    e.probability_bound =
        constants::gen_prefactor() * std::exp(-x * x / (256.0 * (1.0 + d_ratio * x)));
    e.constants["prefactor"] = constants::gen_prefactor();
    e.note = "deviations in sqrt(Var Z) units";
    return e;
}

double h1(double u) {
    require_nonneg(u, "u");
    // algebraically 1 + u - sqrt(1 + 2u); this form avoids cancellation
    return u * u / ((1.0 + u) + std::sqrt(1.0 + 2.0 * u));
}

double h1_inv(double v) {
    require_nonneg(v, "v");
    return v + std::sqrt(2.0 * v);
}

namespace {

double d_mean_square_of(const coefficient_matrix& d) {
    double s = 0.0;
    for (double v : d.entries()) s += v * v;
    return s / static_cast<double>(d.size());
}

} // namespace

double hoeffding_condition_r(const coefficient_matrix& d, double r) {
    if (!(r > 2.0)) throw invalid_parameter_error("moment order r must exceed 2");
    const double ms = d_mean_square_of(d);
    if (ms == 0.0) throw degenerate_input_error("centered matrix is identically zero");
    double num = 0.0;
    for (double v : d.entries()) num += std::pow(std::fabs(v), r);
    num /= static_cast<double>(d.size());
    return num / std::pow(ms, r / 2.0);
}

double hoeffding_condition_max(const coefficient_matrix& d) {
    const double ms = d_mean_square_of(d);
    if (ms == 0.0) throw degenerate_input_error("centered matrix is identically zero");
    return d.max_abs() / std::sqrt(ms);
}

double lindeberg_sum(const coefficient_matrix& d, double eps) {
    if (!(eps > 0.0)) throw invalid_parameter_error("eps must be positive");
    const double ms = d_mean_square_of(d);
    if (ms == 0.0) throw degenerate_input_error("centered matrix is identically zero");
    double s = 0.0;
    for (double v : d.entries()) {
        const double ratio_sq = v * v / ms;
        if (ratio_sq > eps * eps) s += ratio_sq;
    }
    return s;
}

} // namespace permsum
