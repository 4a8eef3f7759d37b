#pragma once

// Shift numbers sht_V(j) = sum over summands V_m of sum_{i=1}^{m-1} floor(i*j/p),
// the jump profile s - sht_V(s) over residues s = 1..p-1, and the stratum
// dimensions nu(M_j) of arcs with ramification jump j.

#include <cstdint>
#include <vector>

#include "psing/checked.hpp"
#include "psing/representation.hpp"

namespace psing {

/// Sum_{i=1}^{m} floor(i*a/p) for m, a >= 0 and p >= 1, in O(log) steps by
/// Euclidean reduction. Throws OverflowError if an intermediate leaves the
/// 128-bit range and ValidationError(OutOfRange) on negative m, a or p < 1.
Int floor_sum(Int m, Int a, Int p);

/// A ramification jump j = n*p + s with n >= 0 and 1 <= s <= p-1.
struct JumpIndex {
    Int j = 1;
    Int n = 0;
    Int s = 1;

    /// Errors: OutOfRange for j <= 0, DivisibleJump when p | j.
    static JumpIndex make(Int j, std::int64_t p);
};

/// sht_V(j) for j > 0 with p not dividing j.
Int sht(const Representation& rep, Int j);

struct ShiftProfile {
    Representation rep;
    std::vector<Int> sht;   // sht[s-1] = sht_V(s), s = 1..p-1
    std::vector<Int> jump;  // jump[s-1] = s - sht_V(s)

    Int sht_at(std::int64_t s) const { return sht.at(static_cast<std::size_t>(s - 1)); }
    Int jump_at(std::int64_t s) const { return jump.at(static_cast<std::size_t>(s - 1)); }
};

inline constexpr std::int64_t kDefaultProfileMaxP = 10'000'000;

/// Materializes sht_V(s) for every s in [1, p-1]. Rejects p > max_p with
/// ValidationError(OutOfRange) since the vector has p-1 entries.
ShiftProfile shift_profile(const Representation& rep, std::int64_t max_p = kDefaultProfileMaxP);

/// nu(M_j): l for j = 0, otherwise l + j - floor(j/p) - sht_V(j). Evaluated
/// in both forms below; a mismatch throws InconsistencyError.
Int nu_stratum(const Representation& rep, Int j);

/// Dimension of (L-1) L^e with e = l + j - 1 - floor(j/p) - sht_V(j), i.e.
/// e + 1, with sht_V(j) evaluated at j itself.
Int nu_from_integral_exponent(const Representation& rep, Int j);

/// l + (p - 1 - D) n + s - sht_V(s) for j = n p + s.
Int nu_from_residue(const Representation& rep, Int j);

/// s - sht_V(s) == sht_V(p-s) + s + d - l - D, for 1 <= s <= p-1.
bool check_lemma_sht(const Representation& rep, Int s);

/// p * sht_V(s) <= (s-1) * D, for 1 <= s <= p-1.
bool check_lemma_upper(const Representation& rep, Int s);

}  // namespace psing
