#include "permsum/constants.hpp"

#include <algorithm>
#include <cmath>

namespace permsum::constants {

double theta() { return 2.5 * std::log(3.0) - 2.0 / 3.0; }
double c0_width() { return 4.0 * std::sqrt(std::log(8.0)); }
double pos_prefactor() { return 8.0 * std::exp(1.0 / 16.0); }
double gen_prefactor() { return 16.0 * std::exp(1.0 / 16.0); }
double c0() { return gen_prefactor(); }
double c1() { return 1.0 / 16.0; }
double c_prime() { return 2.0 * std::max(std::sqrt(2.0 / c1()), 1.0 / c1()); }
double c_quantile() { return 2.0 * c_prime(); }
double c_second_kind() { return 2.0 * std::max(c_quantile(), std::sqrt(8.0)); }

const std::vector<constant_entry>& constant_table() {
    static const std::vector<constant_entry> table = {
        {"C", c_quantile(), "2*Cprime"},
        {"C0", c0_width(), "4*sqrt(ln(8))"},
        {"Cdprime", c_second_kind(), "2*max(C, sqrt(8))"},
        {"Cprime", c_prime(), "2*max(sqrt(2/c1), 1/c1)"},
        {"c0", c0(), "16*exp(1/16)"},
        {"c1", c1(), "1/16"},
        {"gen_prefactor", gen_prefactor(), "16*exp(1/16)"},
        {"pos_prefactor", pos_prefactor(), "8*exp(1/16)"},
        {"theta", theta(), "(5/2)*ln(3) - 2/3"},
    };
    return table;
}

} // namespace permsum::constants
