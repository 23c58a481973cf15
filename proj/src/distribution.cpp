#include "permsum/distribution.hpp"

#include "permsum/errors.hpp"

namespace permsum {

perm_sum_distribution exact_distribution(const coefficient_matrix& a) {
    perm_sum_distribution d;
    d.kind = perm_sum_distribution::kind_t::exact;
    d.n = a.size();
    d.sample_size = factorial(a.size());
    d.values.reserve(d.sample_size);
    for_each_permutation(a.size(), [&](const permutation& p) {
        d.values.push_back(permuted_sum(a, p));
    });
    return d;
}

perm_sum_distribution sample_distribution(const coefficient_matrix& a, std::uint64_t b,
                                          std::uint64_t seed) {
    if (b == 0) throw invalid_parameter_error("sample size must be positive");
    perm_sum_distribution d;
    d.kind = perm_sum_distribution::kind_t::empirical;
    d.n = a.size();
    d.sample_size = b;
    d.seed = seed;
    d.values.reserve(b);
    for (std::uint64_t k = 0; k < b; ++k) {
        splitmix64 rng(derive_stream(seed, k));
        d.values.push_back(permuted_sum(a, sample_permutation(a.size(), rng)));
    }
    return d;
}

} // namespace permsum
