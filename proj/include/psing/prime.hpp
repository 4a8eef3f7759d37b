#pragma once

#include <compare>
#include <cstdint>

#include "psing/checked.hpp"

namespace psing {

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// The characteristic of the base field. Always holds a verified prime.
class Prime {
public:
    /// Throws ValidationError(NotPrime) unless `value` is a prime that fits
    /// in a signed 64-bit word.
    static Prime make(Int value);

    std::int64_t value() const noexcept { return value_; }
    explicit operator Int() const noexcept { return value_; }

    friend auto operator<=>(const Prime&, const Prime&) = default;

private:
    explicit Prime(std::int64_t value) : value_(value) {}
    std::int64_t value_;
};

}  // namespace psing
