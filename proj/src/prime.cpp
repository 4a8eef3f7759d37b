#include "psing/prime.hpp"

#include <array>
#include <limits>

namespace psing {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : kBases) {
        if (n % q == 0) return n == q;
    }
    u64 odd = n - 1;
    int twos = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++twos;
    }
    // These twelve bases are a proven witness set below 3.3e24 > 2^64.
    for (u64 a : kBases) {
        u64 x = pow_mod(a, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < twos; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Prime Prime::make(Int value) {
    if (value < 2 || value > std::numeric_limits<std::int64_t>::max() ||
        !is_prime(static_cast<std::uint64_t>(value))) {
        throw ValidationError(Rule::NotPrime, "p must be prime (got " + to_string(value) + ")");
    }
    return Prime(static_cast<std::int64_t>(value));
}

}  // namespace psing
