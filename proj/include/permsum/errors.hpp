#pragma once

#include <stdexcept>
#include <string>

namespace permsum {

// Categorized errors so callers (and the CLI exit-code mapping) can tell
// domain failures apart from programming mistakes.

struct invalid_size_error : std::invalid_argument {
    explicit invalid_size_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct dimension_error : std::invalid_argument {
    explicit dimension_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct enumeration_limit_error : std::length_error {
    explicit enumeration_limit_error(const std::string& msg) : std::length_error(msg) {}
};

struct invalid_parameter_error : std::invalid_argument {
    explicit invalid_parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct degenerate_input_error : std::domain_error {
    explicit degenerate_input_error(const std::string& msg) : std::domain_error(msg) {}
};

struct family_not_applicable_error : std::invalid_argument {
    explicit family_not_applicable_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct kernel_bound_violation : std::domain_error {
    explicit kernel_bound_violation(const std::string& msg) : std::domain_error(msg) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace permsum
