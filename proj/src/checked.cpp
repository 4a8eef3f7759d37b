#include "psing/checked.hpp"

#include <algorithm>
#include <limits>

namespace psing {

std::string to_string(Int value) {
    if (value == 0) return "0";
    bool negative = value < 0;
    // Work on the negative side so INT128_MIN is representable.
    Int v = negative ? value : -value;
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::optional<Int> parse_int(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) return std::nullopt;
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') return std::nullopt;
        Int digit = c - '0';
        if (__builtin_mul_overflow(value, Int{10}, &value)) return std::nullopt;
        if (__builtin_sub_overflow(value, digit, &value)) return std::nullopt;
    }
    if (!negative) {
        if (__builtin_sub_overflow(Int{0}, value, &value)) return std::nullopt;
    }
    return value;
}

std::optional<std::int64_t> to_int64(Int value) noexcept {
    if (value < std::numeric_limits<std::int64_t>::min() ||
        value > std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(value);
}

}  // namespace psing
