#include "permsum/permutation.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "permsum/errors.hpp"

namespace permsum {

namespace {

constexpr std::size_t kHardLimit = 10;
std::atomic<std::size_t> g_exact_limit{8};

void check_size(std::size_t n) {
    if (n == 0) throw invalid_size_error("permutation size must be at least 1");
}

void check_enumerable(std::size_t n) {
    check_size(n);
    const std::size_t limit = exact_limit();
    if (n > limit) {
        throw enumeration_limit_error("n=" + std::to_string(n) +
                                      " exceeds the exact enumeration limit " +
                                      std::to_string(limit) + " (hard cap " +
                                      std::to_string(kHardLimit) + ")");
    }
}

} // namespace

permutation::permutation(std::vector<std::uint32_t> mapping) : map_(std::move(mapping)) {
    check_size(map_.size());
    std::vector<bool> seen(map_.size(), false);
    for (std::uint32_t v : map_) {
        if (v >= map_.size() || seen[v])
            throw invalid_parameter_error("mapping is not a bijection on {0,...,n-1}");
        seen[v] = true;
    }
}

permutation permutation::identity(std::size_t n) {
    check_size(n);
    std::vector<std::uint32_t> m(n);
    std::iota(m.begin(), m.end(), 0u);
    return permutation(std::move(m), unchecked{});
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

std::size_t exact_limit() { return g_exact_limit.load(); }

void set_exact_limit(std::size_t n) {
    if (n < 1 || n > kHardLimit)
        throw invalid_parameter_error("exact enumeration limit must lie in [1, " +
                                      std::to_string(kHardLimit) + "]");
    g_exact_limit.store(n);
}

permutation sample_permutation(std::size_t n, splitmix64& rng) {
    check_size(n);
    std::vector<std::uint32_t> m(n);
    std::iota(m.begin(), m.end(), 0u);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(m[i], m[j]);
    }
    return permutation(std::move(m), permutation::unchecked{});
}

void for_each_permutation(std::size_t n, const std::function<void(const permutation&)>& fn) {
    check_enumerable(n);
    std::vector<std::uint32_t> m(n);
    std::iota(m.begin(), m.end(), 0u);
    permutation p(m, permutation::unchecked{});
    do {
        fn(p);
    } while (std::next_permutation(p.map_.begin(), p.map_.end()));
}

std::vector<permutation> enumerate_permutations(std::size_t n) {
    std::vector<permutation> out;
    out.reserve(factorial(n));
    for_each_permutation(n, [&](const permutation& p) { out.push_back(p); });
    return out;
}

} // namespace permsum
