#pragma once

// A linear representation of Z/p in characteristic p, recorded by its
// decomposition into indecomposable summands V_1, ..., V_p.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psing/checked.hpp"
#include "psing/prime.hpp"

namespace psing {

/// `multiplicity` copies of the indecomposable summand of dimension `size`.
struct PartRun {
    std::int64_t size = 1;
    Int multiplicity = 1;

    friend bool operator==(const PartRun&, const PartRun&) = default;
};

/// Immutable, canonicalized representation: distinct part sizes in strictly
/// decreasing order, each with a positive multiplicity. This is the
/// non-increasing part multiset in run-length form.
class Representation {
public:
    const Prime& prime() const noexcept { return prime_; }
    std::int64_t p() const noexcept { return prime_.value(); }

    std::span<const PartRun> runs() const noexcept { return runs_; }

    /// Number of summands (the dimension l of the fixed locus).
    Int num_parts() const noexcept { return num_parts_; }
    /// Total dimension d.
    Int dimension() const noexcept { return dimension_; }

    /// Expanded non-increasing part list. Throws OutOfRange if it would hold
    /// more than `max_parts` entries.
    std::vector<std::int64_t> parts(std::size_t max_parts = 1u << 24) const;

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    friend Representation make_representation(const Prime&, std::vector<PartRun>);

    Representation(Prime prime, std::vector<PartRun> runs, Int num_parts, Int dimension)
        : prime_(prime), runs_(std::move(runs)), num_parts_(num_parts), dimension_(dimension) {}

    Prime prime_;
    std::vector<PartRun> runs_;
    Int num_parts_;
    Int dimension_;
};

/// Validates and canonicalizes. Runs may be in any order and may repeat a
/// size. Errors: EmptyParts, PartBelowOne, PartExceedsP, Syntax (zero
/// multiplicity).
Representation make_representation(const Prime& p, std::vector<PartRun> runs);

/// Validates p and a plain list of part sizes. Errors, in checking order:
/// NotPrime, EmptyParts, PartBelowOne, PartExceedsP.
Representation parse_representation(Int p, std::span<const Int> parts);

/// Same, with the parts given in the text grammar
///   rep  := term ("," term)*
///   term := size ("^" multiplicity)?
/// Whitespace is ignored, so "2^3, 1^2" and "2^3,1^2" are equal.
Representation parse_representation(Int p, std::string_view rep_string);

/// Parses the grammar alone, without range checks against p.
std::vector<PartRun> parse_rep_string(std::string_view rep_string);

/// Canonical text form: runs in decreasing size, multiplicity 1 written
/// bare, e.g. "4", "2^3", "3,2^2,1".
std::string format_rep_string(const Representation& rep);

/// Direct sum of two representations over the same prime.
Representation direct_sum(const Representation& a, const Representation& b);

struct Invariants {
    Int d = 0;      // total dimension
    Int l = 0;      // number of summands, dim V^G
    Int codim = 0;  // d - l
    Int D = 0;      // sum over summands of (size - 1) * size / 2
    bool cm = false;

    friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants(const Representation& rep);

/// The invariant D of a single indecomposable summand of dimension `size`.
Int indecomposable_D(std::int64_t size);

}  // namespace psing
