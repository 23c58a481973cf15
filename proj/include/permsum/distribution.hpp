#pragma once

#include <cstdint>
#include <vector>

#include "permsum/matrix.hpp"

namespace permsum {

// The distribution of Z = sum_i a_{i,p(i)} under a uniform random permutation:
// either the full multiset over all n! permutations or a Monte Carlo sample.
struct perm_sum_distribution {
    enum class kind_t { exact, empirical };

    kind_t kind = kind_t::exact;
    std::size_t n = 0;
    std::uint64_t sample_size = 0;   // n! for exact, B for empirical
    std::uint64_t seed = 0;          // meaningful for empirical only

    // exact: lexicographic permutation order; empirical: draw order
    std::vector<double> values;

    bool exact() const { return kind == kind_t::exact; }
};

perm_sum_distribution exact_distribution(const coefficient_matrix& a);

// Each draw b uses the substream derived from (seed, b), so the result is
// identical however the draws are scheduled.
perm_sum_distribution sample_distribution(const coefficient_matrix& a, std::uint64_t b,
                                          std::uint64_t seed);

} // namespace permsum
