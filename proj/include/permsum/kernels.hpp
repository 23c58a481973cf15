#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace permsum {

using point = std::vector<double>;

// A kernel phi(x, y) on pairs of observation coordinates, with an optional
// declared sup-norm. The sup-norm is never estimated from data: the quantile
// bounds need a true ||phi||_inf, so it is either intrinsic to the kernel
// (gaussian, coincidence, haar) or declared by the caller (product).
struct kernel_spec {
    std::string name;
    std::map<std::string, double> params;
    std::function<double(const point&, const point&)> evaluate;
    std::optional<double> sup_norm;
};

// phi(x, y) = <x, y>; no intrinsic bound, sup_norm must be declared for
// the quantile-bound operations.
kernel_spec make_product_kernel(std::optional<double> sup_norm = std::nullopt);

// phi(x, y) = exp(-|x - y|^2 / (2 sigma^2)); sup_norm = 1.
kernel_spec make_gaussian_kernel(double sigma);

// One-dimensional Haar-type tensor at scale delta:
// psi(u) = (1 on [0, delta/2), -1 on [delta/2, delta), 0 elsewhere) / sqrt(delta),
// phi(x, y) = psi(x) psi(y); sup_norm = 1/delta.
kernel_spec make_haar_kernel(double delta);

// phi(x, y) = 1{ max_k |x_k - y_k| <= delta }; sup_norm = 1.
kernel_spec make_coincidence_kernel(double delta);

// Parses "product", "gaussian:0.5", "haar:0.25", "coincidence:0.1".
kernel_spec parse_kernel(const std::string& text,
                         std::optional<double> sup_norm_override = std::nullopt);

} // namespace permsum
