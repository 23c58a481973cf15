#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permsum/bounds.hpp"
#include "permsum/distribution.hpp"
#include "permsum/generators.hpp"

namespace permsum {

enum class curve_center { mean, median };

// Empirical deviation tail of a permuted-sum distribution:
// tail_probs[k] = #{ v : |v - centering_value| >= grid[k] } / sample_size.
struct tail_curve {
    curve_center center = curve_center::mean;
    double centering_value = 0.0;
    std::vector<double> grid;
    std::vector<double> tail_probs;
    bool exact_source = true;
    std::uint64_t sample_size = 0;
    std::uint64_t seed = 0;
};

tail_curve compute_tail_curve(const perm_sum_distribution& dist, curve_center center,
                              std::vector<double> grid);

// 64 evenly spaced thresholds over [0, max |v - center|] unless told otherwise.
std::vector<double> default_grid(const perm_sum_distribution& dist, double center,
                                 std::size_t points = 64);

struct domination_row {
    double t = 0.0;               // threshold (Z scale unless the family says otherwise)
    double empirical_tail = 0.0;
    double raw_bound = 0.0;
    double capped_bound = 0.0;
    double mc_margin = 0.0;       // 0 for exact sources, 3 sqrt(p(1-p)/B) for Monte Carlo
    bool dominated = false;
};

struct domination_report {
    enum class verdict_t { all_dominated, violations_found, degenerate };

    std::string family;
    std::vector<domination_row> rows;
    std::vector<std::size_t> violations;
    verdict_t verdict = verdict_t::all_dominated;

    bool all_dominated() const { return verdict == verdict_t::all_dominated; }
};

// Generic check of evaluated bounds against a tail curve; evals[k] must
// correspond to grid[k]. Used for the probability-form families whose event
// is a plain absolute deviation.
domination_report domination_check(const tail_curve& curve,
                                   const std::vector<bound_evaluation>& evals);

// Family-aware check: builds the right grid (t or x), the right centering
// (mean or median, including both median endpoints), and the comparison the
// family's statement actually uses (strict for median-pos, one-sided for the
// sqrt-median pair).
domination_report check_family_domination(const coefficient_matrix& a,
                                          const perm_sum_distribution& dist,
                                          const std::string& family,
                                          std::size_t grid_points = 64,
                                          std::uint64_t aux_seed = 0);

bool family_is_matrix_applicable(const std::string& family);
bool family_requires_nonneg(const std::string& family);

// A reproducible batch of domination checks over generated matrices.
struct sweep_spec {
    matrix_generator_spec generator;
    std::vector<std::size_t> n_list;
    std::size_t matrices_per_n = 1;
    std::vector<std::string> families;
    bool exact = true;
    std::uint64_t mc_b = 0;       // draws per matrix when exact == false
    std::uint64_t seed = 0;
    std::size_t grid_points = 64;
};

struct sweep_matrix_report {
    std::size_t n = 0;
    std::size_t index = 0;
    std::uint64_t matrix_seed = 0;
    std::vector<domination_report> family_reports;
};

struct sweep_report {
    sweep_spec spec;
    std::vector<sweep_matrix_report> matrices;
    bool all_dominated = true;
};

sweep_report run_sweep(const sweep_spec& spec);

} // namespace permsum
