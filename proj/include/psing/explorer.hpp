#pragma once

// Enumeration of every representation of a given dimension, predicate
// searches over those universes, and classification tables.

#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <vector>

#include "psing/discrepancy.hpp"
#include "psing/representation.hpp"

namespace psing {

/// Partitions of d into parts in [1, p], in reverse-lexicographic order of
/// the non-increasing part list: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
class PartitionStream {
public:
    PartitionStream(Prime p, std::int64_t d);

    /// Next representation, or nullopt when exhausted.
    std::optional<Representation> next();

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Representation;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(PartitionStream* stream) : stream_(stream) { ++*this; }

        const Representation& operator*() const { return *current_; }
        const Representation* operator->() const { return &*current_; }
        iterator& operator++() {
            current_ = stream_->next();
            if (!current_) stream_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

    private:
        PartitionStream* stream_ = nullptr;
        std::optional<Representation> current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

private:
    Prime p_;
    std::vector<std::int64_t> parts_;
    bool started_ = false;
    bool done_ = false;
};

/// Single-consumer stream over every representation of dimension d >= 1.
PartitionStream enumerate_reps(Prime p, std::int64_t d);

inline constexpr std::uint64_t kDefaultMaxPartitions = 1'000'000;

/// Enumeration cap per (p, d) cell: PSING_MAX_PARTITIONS if set to a
/// positive integer, otherwise kDefaultMaxPartitions.
std::uint64_t max_partitions_from_env();

struct Predicate {
    std::optional<std::set<SingularityClass>> classes;
    std::optional<bool> cm;
    std::optional<Int> D_min, D_max;
    /// Matches finite delta only.
    std::optional<Int> delta_min, delta_max;

    bool matches(const SingularityReport& report) const;
};

enum class Objective { None, MinimizeDimension };

struct SearchQuery {
    std::vector<Prime> primes;
    std::int64_t d_min = 1;
    std::int64_t d_max = 1;
    Predicate predicate;
    Objective objective = Objective::None;
    std::uint64_t max_partitions = kDefaultMaxPartitions;
};

struct TableRow {
    SingularityReport report;

    const Representation& rep() const { return report.rep; }
};

/// Matching rows sorted by p, then d, then enumeration order. With
/// MinimizeDimension only the rows at the smallest matching d are kept, per
/// prime. Throws CapExceededError if some (p, d) cell exceeds the cap and
/// ValidationError on an invalid query.
std::vector<TableRow> run_search(const SearchQuery& query);

/// Every representation of dimension 1..d_max for every prime.
std::vector<TableRow> build_table(const std::vector<Prime>& primes, std::int64_t d_max,
                                  std::uint64_t max_partitions = kDefaultMaxPartitions);

}  // namespace psing
