#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace malab {

/// Exact integer fitness value. All benchmark functions in this project are
/// integer-valued, so selection and pivoting never compare with a tolerance.
/// Arithmetic that would leave the 64-bit signed range throws instead of
/// wrapping.
struct Fitness {
    std::int64_t value = 0;

    constexpr Fitness() = default;
    constexpr explicit Fitness(std::int64_t v) : value(v) {}

    auto operator<=>(const Fitness&) const = default;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("fitness arithmetic overflow (add)");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("fitness arithmetic overflow (mul)");
    return r;
}

} // namespace malab
