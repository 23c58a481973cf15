#pragma once

#include <cstdint>
#include <string>

#include "permsum/matrix.hpp"

namespace permsum {

// Built-in matrix families used by sweeps and simulations:
//   product        b_i * c_j with b, c iid U(0,1)  (rank one, non-negative)
//   iid-uniform    entries iid U(0,1)
//   iid-rademacher entries iid +-1                  (signed, atomic)
//   sparse         one U(0,1) entry per row, random column (heavy-tailed d)
//   constant       every entry equal (degenerate)
struct matrix_generator_spec {
    std::string name;
    double constant_value = 1.0;
};

coefficient_matrix generate_matrix(const matrix_generator_spec& spec, std::size_t n,
                                   std::uint64_t seed);

bool generator_non_negative(const matrix_generator_spec& spec);

} // namespace permsum
