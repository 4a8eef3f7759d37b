#include "psing/shift.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace psing {
namespace {

void require_residue(const Representation& rep, Int s) {
    if (s < 1 || s > rep.p() - 1) {
        throw ValidationError(Rule::OutOfRange,
                              "s = " + to_string(s) + " is outside [1, p-1]");
    }
}

// Entries computed per worker before the profile fans out.
constexpr std::int64_t kProfileChunk = 1 << 16;

}  // namespace

Int floor_sum(Int m, Int a, Int p) {
    if (m < 0 || a < 0 || p < 1) {
        throw ValidationError(Rule::OutOfRange, "floor_sum needs m >= 0, a >= 0, p >= 1");
    }
    // Sum_{i=0}^{n-1} floor((a*i + b)/p) with n = m + 1 and b = 0; the i = 0
    // term vanishes. Each round extracts the integral parts of a/p and b/p,
    // then swaps the roles of a and p on the lattice-point count that remains.
    Int n = checked::add(m, 1);
    Int b = 0;
    Int total = 0;
    while (true) {
        if (a >= p) {
            Int tri = (n % 2 == 0) ? checked::mul(n / 2, n - 1) : checked::mul(n, (n - 1) / 2);
            total = checked::add(total, checked::mul(tri, a / p));
            a %= p;
        }
        if (b >= p) {
            total = checked::add(total, checked::mul(n, b / p));
            b %= p;
        }
        Int y_max = checked::add(checked::mul(a, n), b);
        if (y_max < p) break;
        n = y_max / p;
        b = y_max % p;
        std::swap(a, p);
    }
    return total;
}

JumpIndex JumpIndex::make(Int j, std::int64_t p) {
    if (j <= 0) {
        throw ValidationError(Rule::OutOfRange, "jump j = " + to_string(j) + " must be positive");
    }
    if (j % p == 0) {
        throw ValidationError(Rule::DivisibleJump, "jump j = " + to_string(j) +
                                                       " is divisible by p = " + std::to_string(p));
    }
    return {j, j / p, j % p};
}

Int sht(const Representation& rep, Int j) {
    JumpIndex::make(j, rep.p());
    Int total = 0;
    for (const auto& run : rep.runs()) {
        Int per_part = floor_sum(run.size - 1, j, rep.p());
        total = checked::add(total, checked::mul(run.multiplicity, per_part));
    }
    return total;
}

ShiftProfile shift_profile(const Representation& rep, std::int64_t max_p) {
    const std::int64_t p = rep.p();
    if (p > max_p) {
        throw ValidationError(Rule::OutOfRange, "p = " + std::to_string(p) +
                                                    " exceeds the shift-profile limit " +
                                                    std::to_string(max_p));
    }
    const auto count = static_cast<std::size_t>(p - 1);
    ShiftProfile profile{rep, std::vector<Int>(count), std::vector<Int>(count)};

    auto fill = [&](std::int64_t first, std::int64_t last) {
        for (std::int64_t s = first; s < last; ++s) {
            Int value = sht(rep, s);
            profile.sht[static_cast<std::size_t>(s - 1)] = value;
            profile.jump[static_cast<std::size_t>(s - 1)] = s - value;
        }
    };

    if (p - 1 <= kProfileChunk) {
        fill(1, p);
        return profile;
    }
    // Disjoint index ranges per task, so the result does not depend on
    // scheduling.
    const auto workers = static_cast<std::int64_t>(std::max(1u, std::thread::hardware_concurrency()));
    const std::int64_t stride = std::max<std::int64_t>(kProfileChunk, (p - 1 + workers - 1) / workers);
    std::vector<std::future<void>> tasks;
    for (std::int64_t first = 1; first < p; first += stride) {
        tasks.push_back(std::async(std::launch::async, fill, first, std::min(p, first + stride)));
    }
    for (auto& task : tasks) task.get();
    return profile;
}

Int nu_from_integral_exponent(const Representation& rep, Int j) {
    Int l = rep.num_parts();
    if (j == 0) return l;
    JumpIndex::make(j, rep.p());
    Int exponent = checked::sub(checked::sub(checked::add(l, j - 1), j / rep.p()), sht(rep, j));
    return checked::add(exponent, 1);
}

Int nu_from_residue(const Representation& rep, Int j) {
    Int l = rep.num_parts();
    if (j == 0) return l;
    JumpIndex idx = JumpIndex::make(j, rep.p());
    Int slope = checked::sub(rep.p() - 1, invariants(rep).D);
    Int value = checked::add(l, checked::mul(slope, idx.n));
    return checked::add(value, checked::sub(idx.s, sht(rep, idx.s)));
}

Int nu_stratum(const Representation& rep, Int j) {
    if (j < 0) {
        throw ValidationError(Rule::OutOfRange, "jump j = " + to_string(j) + " must be >= 0");
    }
    Int direct = nu_from_integral_exponent(rep, j);
    Int periodic = nu_from_residue(rep, j);
    if (direct != periodic) {
        throw InconsistencyError("nu(M_" + to_string(j) + ") disagrees: " + to_string(direct) +
                                 " vs " + to_string(periodic));
    }
    return direct;
}

bool check_lemma_sht(const Representation& rep, Int s) {
    require_residue(rep, s);
    Invariants inv = invariants(rep);
    Int lhs = checked::sub(s, sht(rep, s));
    Int rhs = checked::add(sht(rep, rep.p() - s), s);
    rhs = checked::sub(checked::add(rhs, inv.codim), inv.D);
    return lhs == rhs;
}

bool check_lemma_upper(const Representation& rep, Int s) {
    require_residue(rep, s);
    Int lhs = checked::mul(rep.p(), sht(rep, s));
    Int rhs = checked::mul(s - 1, invariants(rep).D);
    return lhs <= rhs;
}

}  // namespace psing
