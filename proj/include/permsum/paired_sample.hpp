#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "permsum/kernels.hpp"
#include "permsum/rng.hpp"

namespace permsum {

// n paired observations (X_i^1, X_i^2); each coordinate block may be
// multi-dimensional but all points share one dimension per block.
struct paired_sample {
    std::vector<point> first;
    std::vector<point> second;

    std::size_t size() const { return first.size(); }
};

paired_sample make_paired_sample(std::vector<point> first, std::vector<point> second);

// CSV with 2k columns per row: the first k are X^1 coordinates, the rest X^2.
paired_sample parse_paired_csv(std::istream& in);
paired_sample read_paired_csv(const std::string& path);

// Built-in data generators for level and power studies:
//   independent-uniform      X^1, X^2 iid U(0,1), independent
//   independent-discrete     X^1, X^2 independent uniform on {0,...,k-1}
//   coupled-discrete         X^1 uniform on {0,...,k-1}, X^2 = X^1
//   noisy-coupled-discrete   X^2 = X^1 with prob 1-eps, else fresh uniform
struct paired_generator_spec {
    std::string name;
    std::map<std::string, double> params; // "k", "eps" where applicable
};

paired_sample generate_paired_sample(const paired_generator_spec& spec, std::size_t n,
                                     splitmix64& rng);

bool generator_is_independent(const paired_generator_spec& spec);

} // namespace permsum
