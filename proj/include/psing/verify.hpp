#pragma once

// Sweeps every representation in a (primes, d <= d_max) universe and checks
// the identities and bounds that tie the shift numbers to the discrepancy.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psing/explorer.hpp"

namespace psing {

struct PropertyTally {
    std::string name;
    std::uint64_t instances = 0;
};

struct Counterexample {
    std::string property;
    std::int64_t p = 0;
    std::string rep;
    std::string detail;
};

struct VerifySummary {
    std::vector<PropertyTally> tallies;
    std::uint64_t representations = 0;
    /// First failing instance; the sweep stops there.
    std::optional<Counterexample> failure;

    bool ok() const noexcept { return !failure.has_value(); }
};

/// Property names, in reporting order.
const std::vector<std::string>& verify_property_names();

VerifySummary run_verification(const std::vector<Prime>& primes, std::int64_t d_max, Int n_max,
                               std::uint64_t max_partitions = kDefaultMaxPartitions);

}  // namespace psing
