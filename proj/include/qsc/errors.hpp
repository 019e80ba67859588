#pragma once

#include <stdexcept>
#include <string>

namespace qsc {

struct division_by_zero_polynomial : std::domain_error {
    division_by_zero_polynomial() : std::domain_error("division by the zero polynomial") {}
};

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct zero_base_error : std::domain_error {
    zero_base_error() : std::domain_error("negative power evaluated at zero") {}
};

/// A q-Pochhammer factor (or a cleared denominator) is identically zero.
struct degenerate_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised by ring inversion; `witness` is the printed gcd with the modulus.
struct non_unit_error : std::domain_error {
    non_unit_error(const std::string& what, std::string gcd)
        : std::domain_error(what), witness(std::move(gcd)) {}
    std::string witness;
};

struct integrality_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct invalid_ring : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resample_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qsc
