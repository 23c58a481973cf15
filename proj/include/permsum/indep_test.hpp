#pragma once

#include <cstdint>
#include <optional>

#include "permsum/distribution.hpp"
#include "permsum/matrix.hpp"
#include "permsum/paired_sample.hpp"

namespace permsum {

// Kernel evaluations phi(X_i^1, X_j^2) as a square matrix. If the kernel
// declares a sup-norm, every observed value is checked against it.
coefficient_matrix phi_matrix(const paired_sample& s, const kernel_spec& k);

// T = (1/(n-1)) * (sum_i phi_ii - (1/n) sum_{i,j} phi_ij): diagonal sum against
// the all-pairs mean. Unbiased for E phi(X^1, X^2) - E phi(X^1, Y^2) with Y an
// independent copy of X^2, so E T = 0 exactly when the coordinates are independent.
double test_statistic_from_phi(const coefficient_matrix& phi);
double test_statistic(const paired_sample& s, const kernel_spec& k);

// Same statistic with the second coordinates permuted by p.
double permuted_statistic_from_phi(const coefficient_matrix& phi, const permutation& p);

struct critical_value_mode {
    bool exact = true;
    std::uint64_t b = 0;     // sampled permutations in Monte Carlo mode
    std::uint64_t seed = 0;
};

// Exact floor(n * alpha) treating alpha as the exact binary rational the
// double holds, so order-statistic indices never drift across platforms.
std::uint64_t floor_scaled(std::uint64_t n, double alpha);

// Exact mode: all n! permuted statistics. Monte Carlo mode: b sampled
// statistics plus the identity's, so the pool has b+1 entries and the
// resulting test keeps level alpha.
std::vector<double> permuted_statistic_pool(const coefficient_matrix& phi,
                                            const critical_value_mode& mode);

// Ascending order statistic at 1-based index N - floor(N alpha), N = pool size.
double critical_value(const coefficient_matrix& phi, double alpha,
                      const critical_value_mode& mode);

// Upper bound on the conditional (1-alpha) critical value:
// (Cprime/(n-1)) * ( sqrt((1/n) sum phi^2) sqrt(ln(c0/alpha)) + sup_norm ln(c0/alpha) ).
double conditional_quantile_bound(const coefficient_matrix& phi, double sup_norm, double alpha);

// Mean of squared permuted statistics: exact enumeration when allowed,
// Monte Carlo estimate otherwise (exact flag in the result distinguishes).
struct conditional_variance_result {
    double value = 0.0;
    bool exact = true;
};
conditional_variance_result conditional_statistic_variance(const coefficient_matrix& phi,
                                                           const critical_value_mode& mode);

// q_{1-alpha} <= sqrt(((1-alpha)/alpha) * Var(T | sample)).
double hoeffding_quantile_bound(double conditional_variance, double alpha);

// Lemma-form bounds on Var T with m_p = E_P phi^2 and m_indep = E phi^2 under
// independent coordinates; sharp <= loose always, both need n >= 4.
struct variance_bound_pair {
    double sharp = 0.0;
    double loose = 0.0;
};
variance_bound_pair tstat_variance_bound(double m_p, double m_indep, std::size_t n);

// Plug-in estimates: diagonal mean of phi^2 and off-diagonal mean of phi^2.
struct plugin_moment_estimates {
    double m_p_hat = 0.0;
    double m_indep_hat = 0.0;
};
plugin_moment_estimates plugin_moments(const coefficient_matrix& phi);

// Bounds on the (1 - beta/2) quantile of the random critical value q_{1-alpha}(X_n).
enum class qq_form { sharp, hoeffding };
double quantile_of_quantile_bound(double m_p, double m_indep, std::optional<double> sup_norm,
                                  std::size_t n, double alpha, double beta, qq_form form);

// Sufficient conditions on E T for power >= 1 - beta.
enum class second_kind_form { chebyshev, hoeffding, sharp };
struct second_kind_result {
    double threshold = 0.0;
    bool satisfied = false;
};
second_kind_result second_kind_condition(double expected_t, double m_p, double m_indep,
                                         std::optional<double> sup_norm, std::size_t n,
                                         double alpha, double beta, second_kind_form form,
                                         std::optional<double> supplied_quantile = std::nullopt,
                                         std::optional<double> supplied_variance = std::nullopt);

struct test_diagnostics {
    std::optional<double> conditional_quantile_bound; // needs a declared sup-norm
    double conditional_variance = 0.0;
    bool conditional_variance_exact = true;
    double hoeffding_quantile_bound = 0.0;
    double m_p_hat = 0.0;
    double m_indep_hat = 0.0;
    std::optional<variance_bound_pair> plugin_variance_bound; // n >= 4
};

struct test_report {
    std::size_t n = 0;
    std::string kernel_name;
    std::map<std::string, double> kernel_params;
    std::optional<double> sup_norm;
    double alpha = 0.0;
    bool exact_mode = true;
    std::uint64_t mc_b = 0;
    std::uint64_t seed = 0;
    double statistic = 0.0;
    double critical_value = 0.0;
    bool reject = false;   // strict: statistic > critical value
    std::optional<test_diagnostics> diagnostics;
};

test_report run_test(const paired_sample& s, const kernel_spec& k, double alpha,
                     const critical_value_mode& mode, bool with_diagnostics = false);

struct simulation_result {
    std::uint64_t trials = 0;
    std::uint64_t rejections = 0;
    double rate = 0.0;
};

simulation_result level_simulation(const paired_generator_spec& gen, const kernel_spec& k,
                                   std::size_t n, double alpha, std::uint64_t trials,
                                   std::uint64_t seed, const critical_value_mode& mode);

struct population_values {
    double expected_t = 0.0;
    double m_p = 0.0;
    double m_indep = 0.0;
    double beta = 0.0;
};

struct power_result {
    simulation_result sim;
    bool population_estimated = false;
    std::optional<population_values> population;
    std::optional<second_kind_result> chebyshev;
    std::optional<second_kind_result> hoeffding;
    std::optional<second_kind_result> sharp; // needs a declared sup-norm
};

// Rejection rate under the (dependent) generator, plus the second-kind
// condition verdicts at the population values when supplied (estimated from
// a large auxiliary draw otherwise, with estimate_beta as the target beta).
power_result power_simulation(const paired_generator_spec& gen, const kernel_spec& k,
                              std::size_t n, double alpha, std::uint64_t trials,
                              std::uint64_t seed, const critical_value_mode& mode,
                              std::optional<population_values> pop = std::nullopt,
                              double estimate_beta = 0.2);

// Monte Carlo estimate of the (1 - beta/2) quantile of q_{1-alpha}(X_n) over
// fresh samples. A diagnostic, not a guarantee: the distributed guarantees
// come from quantile_of_quantile_bound.
double qq_quantile_mc_estimate(const paired_generator_spec& gen, const kernel_spec& k,
                               std::size_t n, double alpha, double beta, std::uint64_t reps,
                               std::uint64_t seed, const critical_value_mode& mode);

// Monte Carlo estimate of population values for a generator/kernel pair.
population_values estimate_population_values(const paired_generator_spec& gen,
                                             const kernel_spec& k, std::uint64_t pairs,
                                             std::uint64_t seed, double beta);

} // namespace permsum
