#pragma once

#include <string>
#include <vector>

namespace permsum::constants {

// Every universal constant in the bound catalog, frozen here and nowhere else.
// theta enters the Bercu-Delyon-Rio variance term; C0 is the sub-Gaussian
// width that turns the square-root concentration lemma into the median bound;
// (c0, c1) are the prefactor/exponent-rate pair of the general mean bound;
// Cprime, C and Cdprime are the tracked constants of the quantile bounds and
// of the sharp second-kind condition. Any larger values would stay valid; the
// tests pin these exact ones.

double theta();               // (5/2)*ln(3) - 2/3
double c0_width();            // 4*sqrt(ln(8))
double pos_prefactor();       // 8*exp(1/16)
double gen_prefactor();       // 16*exp(1/16), also called c0
double c0();                  // alias of gen_prefactor
double c1();                  // 1/16
double c_prime();             // 2*max(sqrt(2/c1), 1/c1) = 32
double c_quantile();          // 2*c_prime = 64
double c_second_kind();       // 2*max(c_quantile, sqrt(8)) = 128

struct constant_entry {
    std::string name;
    double value;
    std::string expression;
};

const std::vector<constant_entry>& constant_table();

} // namespace permsum::constants
