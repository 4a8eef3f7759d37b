#pragma once

// 128-bit exact integers with overflow detection. Every arithmetic step in
// the library goes through these helpers; an out-of-range result throws
// OverflowError instead of wrapping.

#include <cstdint>
#include <optional>
#include <string>

#include "psing/errors.hpp"

namespace psing {

__extension__ typedef __int128 Int;

namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("overflow in multiplication");
    return r;
}

/// Floor division; b must be positive.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

}  // namespace checked

std::string to_string(Int value);

/// Parses an optionally signed decimal integer; nullopt on bad syntax or
/// out-of-range value.
std::optional<Int> parse_int(std::string_view text);

/// Narrowing helper for APIs that need a machine word.
std::optional<std::int64_t> to_int64(Int value) noexcept;

}  // namespace psing
