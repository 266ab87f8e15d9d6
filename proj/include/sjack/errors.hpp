#pragma once

#include <stdexcept>
#include <string>

namespace sjack {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SJACK_DEFINE_ERROR(name)                                         \
    class name : public error {                                          \
    public:                                                              \
        explicit name(const std::string& msg = #name) : error(msg) {}    \
    }

SJACK_DEFINE_ERROR(weight_mismatch);
SJACK_DEFINE_ERROR(not_in_fat_hook);
SJACK_DEFINE_ERROR(length_violation);
SJACK_DEFINE_ERROR(division_by_zero);
SJACK_DEFINE_ERROR(pole_at_theta);
SJACK_DEFINE_ERROR(variable_count_mismatch);
SJACK_DEFINE_ERROR(length_exceeds_n);
SJACK_DEFINE_ERROR(non_integer_theta);
SJACK_DEFINE_ERROR(not_bisymmetric);
SJACK_DEFINE_ERROR(inexact_division);
SJACK_DEFINE_ERROR(not_proportional);
SJACK_DEFINE_ERROR(theta_not_one);
SJACK_DEFINE_ERROR(degree_overflow);
SJACK_DEFINE_ERROR(symbolic_theta_not_allowed);
SJACK_DEFINE_ERROR(pole_on_diagonal);
SJACK_DEFINE_ERROR(radii_equal);
SJACK_DEFINE_ERROR(bad_input);

#undef SJACK_DEFINE_ERROR

} // namespace sjack
