#include "permsum/kernels.hpp"

#include <cmath>

#include "permsum/errors.hpp"

namespace permsum {

namespace {

double haar_psi(double u, double delta) {
    if (u < 0.0 || u >= delta) return 0.0;
    return (u < 0.5 * delta ? 1.0 : -1.0) / std::sqrt(delta);
}

} // namespace

kernel_spec make_product_kernel(std::optional<double> sup_norm) {
    kernel_spec k;
    k.name = "product";
    k.sup_norm = sup_norm;
    k.evaluate = [](const point& x, const point& y) {
        if (x.size() != y.size())
            throw dimension_error("product kernel needs equal coordinate counts");
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    return k;
}

kernel_spec make_gaussian_kernel(double sigma) {
    if (!(sigma > 0.0)) throw invalid_parameter_error("gaussian bandwidth must be positive");
    kernel_spec k;
    k.name = "gaussian";
    k.params["sigma"] = sigma;
    k.sup_norm = 1.0;
    k.evaluate = [sigma](const point& x, const point& y) {
        if (x.size() != y.size())
            throw dimension_error("gaussian kernel needs equal coordinate counts");
        double d2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
        return std::exp(-d2 / (2.0 * sigma * sigma));
    };
    return k;
}

kernel_spec make_haar_kernel(double delta) {
    if (!(delta > 0.0)) throw invalid_parameter_error("haar scale must be positive");
    kernel_spec k;
    k.name = "haar";
    k.params["delta"] = delta;
    k.sup_norm = 1.0 / delta;
    k.evaluate = [delta](const point& x, const point& y) {
        if (x.size() != 1 || y.size() != 1)
            throw dimension_error("haar kernel is one-dimensional");
        return haar_psi(x[0], delta) * haar_psi(y[0], delta);
    };
    return k;
}

kernel_spec make_coincidence_kernel(double delta) {
    if (!(delta >= 0.0)) throw invalid_parameter_error("coincidence delay must be non-negative");
    kernel_spec k;
    k.name = "coincidence";
    k.params["delta"] = delta;
    k.sup_norm = 1.0;
    k.evaluate = [delta](const point& x, const point& y) {
        if (x.size() != y.size())
            throw dimension_error("coincidence kernel needs equal coordinate counts");
        for (std::size_t i = 0; i < x.size(); ++i)
            if (std::fabs(x[i] - y[i]) > delta) return 0.0;
        return 1.0;
    };
    return k;
}

kernel_spec parse_kernel(const std::string& text, std::optional<double> sup_norm_override) {
    std::string name = text;
    std::optional<double> param;
    const std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        try {
            param = std::stod(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw parse_error("bad kernel parameter in '" + text + "'");
        }
    }
    kernel_spec k;
    if (name == "product") {
        if (param) throw parse_error("product kernel takes no parameter");
        k = make_product_kernel();
    } else if (name == "gaussian") {
        if (!param) throw parse_error("gaussian kernel needs a bandwidth, e.g. gaussian:0.5");
        k = make_gaussian_kernel(*param);
    } else if (name == "haar") {
        if (!param) throw parse_error("haar kernel needs a scale, e.g. haar:0.25");
        k = make_haar_kernel(*param);
    } else if (name == "coincidence") {
        if (!param) throw parse_error("coincidence kernel needs a delay, e.g. coincidence:0.1");
        k = make_coincidence_kernel(*param);
    } else {
        throw parse_error("unknown kernel '" + name + "'");
    }
    if (sup_norm_override) {
        if (!(*sup_norm_override >= 0.0)) throw invalid_parameter_error("sup norm must be >= 0");
        k.sup_norm = sup_norm_override;
    }
    return k;
}

} // namespace permsum
