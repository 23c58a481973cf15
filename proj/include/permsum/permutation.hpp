#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "permsum/rng.hpp"

namespace permsum {

// A permutation of {0,...,n-1}, stored as the image vector p[i].
class permutation {
public:
    explicit permutation(std::vector<std::uint32_t> mapping);

    static permutation identity(std::size_t n);

    std::size_t size() const { return map_.size(); }
    std::uint32_t operator()(std::size_t i) const { return map_[i]; }
    const std::vector<std::uint32_t>& mapping() const { return map_; }

    bool operator==(const permutation& other) const { return map_ == other.map_; }

private:
    struct unchecked {};
    permutation(std::vector<std::uint32_t> mapping, unchecked) : map_(std::move(mapping)) {}

    std::vector<std::uint32_t> map_;

    friend void for_each_permutation(std::size_t, const std::function<void(const permutation&)>&);
    friend permutation sample_permutation(std::size_t, splitmix64&);
};

std::uint64_t factorial(std::size_t n);

// Cap on exact n! enumeration. Defaults to 8, settable up to a hard limit of 10.
std::size_t exact_limit();
void set_exact_limit(std::size_t n);

// Fisher-Yates shuffle of the identity, uniform over all n! permutations.
permutation sample_permutation(std::size_t n, splitmix64& rng);

// Visits all n! permutations in lexicographic order of the image vector.
void for_each_permutation(std::size_t n, const std::function<void(const permutation&)>& fn);

std::vector<permutation> enumerate_permutations(std::size_t n);

} // namespace permsum
