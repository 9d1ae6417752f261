#pragma once

#include <stdexcept>
#include <string>

namespace lm {

enum class errc {
    mixed_discriminant,
    division_by_zero,
    no_real_fixed_point,
    not_affine,
    discontinuous,
    not_increasing,
    germ_not_affine,
    gluing_mismatch,
    syntax_error,
    marker_violation,
    normalization_overflow,
    non_unit_germ_slope,
    bad_sign,
    germ_mismatch,
    not_in_pz,
    not_a_unit,
    invalid_argument,
};

/// Domain error carrying a machine-checkable code alongside the message.
class calc_error : public std::runtime_error {
public:
    calc_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw calc_error(code, what);
}

} // namespace lm
