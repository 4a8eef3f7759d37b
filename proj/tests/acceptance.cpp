// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failing criteria (capped at 1).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "psing/discrepancy.hpp"
#include "psing/explorer.hpp"
#include "psing/shift.hpp"

using namespace psing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Representation rep(Int p, std::vector<Int> parts) { return parse_representation(p, parts); }

// Every representation with d <= 12 and D >= 2 over the sweep primes.
const std::vector<Representation>& sweep() {
    static const std::vector<Representation> reps = [] {
        std::vector<Representation> out;
        for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
            for (std::int64_t d = 1; d <= 12; ++d) {
                for (const auto& r : enumerate_reps(Prime::make(p), d)) {
                    if (invariants(r).D >= 2) out.push_back(r);
                }
            }
        }
        return out;
    }();
    return reps;
}

std::string describe(const Representation& r) {
    return "(p=" + std::to_string(r.p()) + ", " + format_rep_string(r) + ")";
}

Outcome indecomposable_table() {
    const std::vector<Int> expected{0, 1, 3, 6, 10};
    for (Int size = 1; size <= 5; ++size) {
        Int D = invariants(rep(5, {size})).D;
        if (D != expected[static_cast<std::size_t>(size - 1)]) {
            return {false, "D(V_" + to_string(size) + ") = " + to_string(D)};
        }
    }
    return {true, "D = 0,1,3,6,10"};
}

Outcome terminal_non_cm() {
    for (auto r : {rep(5, {4}), rep(2, {2, 2, 2})}) {
        SingularityReport report = classify(r);
        if (report.klass != SingularityClass::Terminal || report.cm) {
            return {false, describe(r) + " classified " + std::string(class_name(report.klass))};
        }
        if (report.delta != DeltaValue::finite(1)) return {false, describe(r) + " delta " + to_string(report.delta)};
        for (Int n : {1, 3, 5}) {
            if (delta_oracle(r, n) != DeltaValue::finite(1)) return {false, describe(r) + " oracle disagrees"};
        }
        auto brute = oracle::brute_delta(r.parts(), r.p());
        if (!brute || brute->via_jumps != 1 || brute->via_reflected != 1) {
            return {false, describe(r) + " brute-force closed forms disagree"};
        }
    }
    return {true, "(5,[4]) and (2,[2,2,2]): terminal, not CM, delta = 1"};
}

Outcome not_log_canonical() {
    SingularityReport report = classify(rep(5, {3}));
    if (report.delta != DeltaValue::negative_infinity() || !report.cm ||
        report.klass != SingularityClass::NotLogCanonical) {
        return {false, "delta " + to_string(report.delta)};
    }
    return {true, "(5,[3]): delta = -inf, CM"};
}

Outcome corollary_sweep() {
    auto start = Clock::now();
    std::size_t count = 0;
    for (const auto& r : sweep()) {
        SingularityReport report = classify(r);
        if (class_from_delta(report.delta) != class_from_thresholds(report.inv.D, r.p())) {
            return {false, describe(r)};
        }
        ++count;
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << count << " representations, " << elapsed << " s (limit 10 s)";
    return {elapsed < 10.0, detail.str()};
}

Outcome lemma_suite() {
    std::size_t count = 0;
    for (const auto& r : sweep()) {
        for (Int s = 1; s < r.p(); ++s) {
            if (!check_lemma_sht(r, s)) return {false, "reflection identity fails at " + describe(r)};
            if (!check_lemma_upper(r, s)) return {false, "upper bound fails at " + describe(r)};
            // Independent evaluation with the defining double loop.
            auto parts = r.parts();
            Invariants inv = invariants(r);
            auto si = static_cast<std::int64_t>(s);
            std::int64_t here = oracle::naive_sht(parts, r.p(), si);
            std::int64_t there = oracle::naive_sht(parts, r.p(), r.p() - si);
            if (si - here != there + si + static_cast<std::int64_t>(inv.d - inv.l - inv.D) ||
                r.p() * here > (si - 1) * static_cast<std::int64_t>(inv.D)) {
                return {false, "brute-force check fails at " + describe(r)};
            }
            ++count;
        }
    }
    return {true, std::to_string(count) + " (rep, s) pairs"};
}

Outcome sandwich() {
    std::size_t finite = 0;
    for (const auto& r : sweep()) {
        DeltaValue dv = delta(r);
        if (!dv.is_finite()) continue;
        TheoremBounds b = bounds(r);
        if (dv.value() > b.upper) return {false, "upper bound fails at " + describe(r)};
        Int D = invariants(r).D;
        if (D >= r.p()) {
            if (!b.lower || Rational(2 * D, r.p()) - Rational(2) > Rational(dv.value())) {
                return {false, "lower bound fails at " + describe(r)};
            }
        }
        ++finite;
    }
    return {true, std::to_string(finite) + " finite values bounded"};
}

Outcome oracle_equivalence() {
    std::size_t count = 0, infinite = 0;
    for (const auto& r : sweep()) {
        DeltaValue dv = delta(r);
        if (dv == DeltaValue::negative_infinity()) ++infinite;
        for (Int n : {1, 3, 5}) {
            if (delta_oracle(r, n) != dv) return {false, describe(r) + " n_max=" + to_string(n)};
            ++count;
        }
    }
    return {true, std::to_string(count) + " comparisons, " + std::to_string(infinite) + " with -inf"};
}

Outcome floor_sum_kernel() {
    auto start = Clock::now();
    std::size_t exhaustive = 0;
    for (std::int64_t p = 1; p <= 200; ++p) {
        for (std::int64_t a = 0; a <= 200; ++a) {
            std::int64_t running = 0;
            for (std::int64_t m = 0; m <= 200; ++m) {
                if (m > 0) running += (m * a) / p;
                if (floor_sum(m, a, p) != running) {
                    return {false, "(" + std::to_string(m) + "," + std::to_string(a) + "," +
                                       std::to_string(p) + ")"};
                }
                ++exhaustive;
            }
        }
    }
    std::mt19937_64 rng(1234567);
    const std::uint64_t limit = 1'000'000'000'000ULL;
    for (int trial = 0; trial < 10000; ++trial) {
        std::int64_t a = static_cast<std::int64_t>(rng() % (limit + 1));
        std::int64_t p = 1 + static_cast<std::int64_t>(rng() % limit);
        std::int64_t m = static_cast<std::int64_t>(rng() % 5001);
        if (oracle::to_big(floor_sum(m, a, p)) != oracle::naive_floor_sum(m, a, p)) {
            return {false, "random case m=" + std::to_string(m)};
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t m = static_cast<std::int64_t>(rng() % (limit + 1));
        std::int64_t a = static_cast<std::int64_t>(rng() % (limit + 1));
        std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 1000);
        if (oracle::to_big(floor_sum(m, a, p)) != oracle::periodic_floor_sum(m, a, p)) {
            return {false, "large-m case m=" + std::to_string(m)};
        }
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << exhaustive << " exhaustive + 10000 random + 200 large-m cases, " << elapsed
           << " s (limit 30 s)";
    return {elapsed < 30.0, detail.str()};
}

Outcome minimal_dimension() {
    SearchQuery q;
    q.primes = {Prime::make(2), Prime::make(3), Prime::make(5), Prime::make(7)};
    q.d_max = 8;
    q.predicate.classes = std::set{SingularityClass::Terminal};
    q.predicate.cm = false;
    auto rows = run_search(q);
    if (rows.empty()) return {false, "no terminal non-CM representation found"};
    Int smallest = rows.front().report.inv.d;
    for (const auto& row : rows) smallest = std::min(smallest, row.report.inv.d);
    std::vector<std::string> at_min;
    for (const auto& row : rows) {
        if (row.report.inv.d == smallest) at_min.push_back(describe(row.rep()));
    }
    bool pass = smallest == 4 && at_min == std::vector<std::string>{"(p=5, 4)"};
    std::string detail = "smallest d = " + to_string(smallest) + " at";
    for (const auto& s : at_min) detail += " " + s;
    return {pass, detail};
}

Outcome nu_spot_checks() {
    Representation v4 = rep(5, {4});
    if (nu_stratum(v4, 0) != 1 || nu_stratum(v4, 1) != 2) return {false, "nu(M_0), nu(M_1) wrong"};
    std::size_t count = 0;
    for (const auto& r : sweep()) {
        for (Int j = 1; j <= 3 * r.p(); ++j) {
            if (j % r.p() == 0) continue;
            if (nu_from_integral_exponent(r, j) != nu_from_residue(r, j)) {
                return {false, describe(r) + " j=" + to_string(j)};
            }
            ++count;
        }
    }
    return {true, "nu(M_0)=1, nu(M_1)=2; " + std::to_string(count) + " two-form comparisons"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 indecomposable D table", indecomposable_table},
        {"AC2 terminal non-CM examples", terminal_non_cm},
        {"AC3 not-log-canonical example", not_log_canonical},
        {"AC4 class threshold sweep", corollary_sweep},
        {"AC5 shift-number lemmas", lemma_suite},
        {"AC6 discrepancy sandwich", sandwich},
        {"AC7 stratum oracle equivalence", oracle_equivalence},
        {"AC8 floor-sum kernel", floor_sum_kernel},
        {"AC9 minimal terminal non-CM dimension", minimal_dimension},
        {"AC10 stratum dimension checks", nu_spot_checks},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << outcome.detail << '\n';
        if (!outcome.pass) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
