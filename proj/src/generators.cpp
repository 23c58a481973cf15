#include "permsum/generators.hpp"

#include <vector>

#include "permsum/errors.hpp"
#include "permsum/rng.hpp"

namespace permsum {

coefficient_matrix generate_matrix(const matrix_generator_spec& spec, std::size_t n,
                                   std::uint64_t seed) {
    if (n < 2) throw invalid_size_error("matrix generators need n >= 2");
    splitmix64 rng(seed);
    std::vector<double> e(n * n, 0.0);
    if (spec.name == "product") {
        std::vector<double> b(n), c(n);
        for (double& v : b) v = rng.uniform01();
        for (double& v : c) v = rng.uniform01();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) e[i * n + j] = b[i] * c[j];
    } else if (spec.name == "iid-uniform") {
        for (double& v : e) v = rng.uniform01();
    } else if (spec.name == "iid-rademacher") {
        for (double& v : e) v = (rng.next() & 1u) ? 1.0 : -1.0;
    } else if (spec.name == "sparse") {
        for (std::size_t i = 0; i < n; ++i)
            e[i * n + rng.below(n)] = rng.uniform01();
    } else if (spec.name == "constant") {
        for (double& v : e) v = spec.constant_value;
    } else {
        throw invalid_parameter_error("unknown matrix generator '" + spec.name + "'");
    }
    return coefficient_matrix(n, std::move(e));
}

bool generator_non_negative(const matrix_generator_spec& spec) {
    if (spec.name == "iid-rademacher") return false;
    if (spec.name == "constant") return spec.constant_value >= 0.0;
    return true;
}

} // namespace permsum
