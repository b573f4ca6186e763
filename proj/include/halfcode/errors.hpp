#pragma once

#include <stdexcept>
#include <string>

namespace halfcode {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid construction parameters (non-prime modulus, reducible modulus polynomial, bad dimensions).
struct invalid_params : error {
    using error::error;
};

struct zero_inverse : error {
    using error::error;
};

struct division_by_zero_poly : error {
    using error::error;
};

struct ctx_mismatch : error {
    using error::error;
};

struct zero_to_zero_power : error {
    using error::error;
};

struct zero_order : error {
    using error::error;
};

struct singular_matrix : error {
    using error::error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct not_involution : error {
    using error::error;
};

struct xi_not_in_v_minus : error {
    using error::error;
};

struct xi_zero : error {
    using error::error;
};

struct rank_deficiency : error {
    using error::error;
};

struct too_large : error {
    using error::error;
};

/// Text input could not be parsed; carries a 1-based line number when known (0 otherwise).
struct parse_error : error {
    std::size_t line;
    explicit parse_error(const std::string& what, std::size_t line_ = 0) : error(what), line(line_) {}
};

} // namespace halfcode
