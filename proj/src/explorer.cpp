#include "psing/explorer.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>

namespace psing {

PartitionStream::PartitionStream(Prime p, std::int64_t d) : p_(p) {
    if (d < 1) throw ValidationError(Rule::OutOfRange, "dimension must be at least 1");
    std::int64_t top = std::min<std::int64_t>(p.value(), d);
    std::int64_t rest = d;
    while (rest > 0) {
        std::int64_t part = std::min(top, rest);
        parts_.push_back(part);
        rest -= part;
    }
}

std::optional<Representation> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // Rightmost part above 1 drops by one; everything after it is
        // refilled greedily with parts no larger than the lowered value.
        std::int64_t ones = 0;
        while (!parts_.empty() && parts_.back() == 1) {
            parts_.pop_back();
            ++ones;
        }
        if (parts_.empty()) {
            done_ = true;
            return std::nullopt;
        }
        std::int64_t cap = --parts_.back();
        std::int64_t rest = ones + 1;
        while (rest > 0) {
            std::int64_t part = std::min(cap, rest);
            parts_.push_back(part);
            rest -= part;
        }
    }
    started_ = true;
    std::vector<PartRun> runs;
    for (std::int64_t part : parts_) {
        if (!runs.empty() && runs.back().size == part) {
            ++runs.back().multiplicity;
        } else {
            runs.push_back({part, 1});
        }
    }
    return make_representation(p_, std::move(runs));
}

PartitionStream enumerate_reps(Prime p, std::int64_t d) { return PartitionStream(p, d); }

std::uint64_t max_partitions_from_env() {
    const char* raw = std::getenv("PSING_MAX_PARTITIONS");
    if (raw == nullptr) return kDefaultMaxPartitions;
    auto value = parse_int(raw);
    if (!value || *value < 1 || *value > static_cast<Int>(UINT64_MAX)) return kDefaultMaxPartitions;
    return static_cast<std::uint64_t>(*value);
}

bool Predicate::matches(const SingularityReport& report) const {
    if (classes && !classes->contains(report.klass)) return false;
    if (cm && *cm != report.cm) return false;
    if (D_min && report.inv.D < *D_min) return false;
    if (D_max && report.inv.D > *D_max) return false;
    if (delta_min || delta_max) {
        if (!report.delta.is_finite()) return false;
        if (delta_min && report.delta.value() < *delta_min) return false;
        if (delta_max && report.delta.value() > *delta_max) return false;
    }
    return true;
}

namespace {

void validate(const SearchQuery& query) {
    if (query.primes.empty()) throw ValidationError(Rule::OutOfRange, "need at least one prime");
    if (query.d_min < 1) throw ValidationError(Rule::OutOfRange, "d_min must be at least 1");
    if (query.d_max < query.d_min) throw ValidationError(Rule::OutOfRange, "d_max must be >= d_min");
}

std::vector<TableRow> search_prime(const SearchQuery& query, Prime p) {
    std::vector<TableRow> rows;
    for (std::int64_t d = query.d_min; d <= query.d_max; ++d) {
        std::uint64_t seen = 0;
        for (const auto& rep : enumerate_reps(p, d)) {
            if (++seen > query.max_partitions) {
                throw CapExceededError("more than " + std::to_string(query.max_partitions) +
                                       " representations for p = " + std::to_string(p.value()) +
                                       ", d = " + std::to_string(d));
            }
            SingularityReport report = classify(rep);
            if (query.predicate.matches(report)) rows.push_back({std::move(report)});
        }
        if (query.objective == Objective::MinimizeDimension && !rows.empty()) break;
    }
    return rows;
}

}  // namespace

std::vector<TableRow> run_search(const SearchQuery& query) {
    validate(query);
    std::vector<Prime> primes = query.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    // One task per prime; results are concatenated in prime order.
    std::vector<std::future<std::vector<TableRow>>> tasks;
    tasks.reserve(primes.size());
    for (const Prime& p : primes) {
        tasks.push_back(std::async(std::launch::async, search_prime, std::cref(query), p));
    }
    std::vector<TableRow> rows;
    for (auto& task : tasks) {
        auto part = task.get();
        std::move(part.begin(), part.end(), std::back_inserter(rows));
    }
    return rows;
}

std::vector<TableRow> build_table(const std::vector<Prime>& primes, std::int64_t d_max,
                                  std::uint64_t max_partitions) {
    SearchQuery query;
    query.primes = primes;
    query.d_min = 1;
    query.d_max = d_max;
    query.max_partitions = max_partitions;
    return run_search(query);
}

}  // namespace psing
