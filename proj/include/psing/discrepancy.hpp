#pragma once

// The discrepancy delta(X) of X = V/(Z/p) over its singular locus, the
// resulting terminal / canonical / log-canonical classification, and the
// accompanying upper and lower bounds.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psing/checked.hpp"
#include "psing/representation.hpp"
#include "psing/shift.hpp"

namespace psing {

/// Finite integer, minus infinity, or Smooth (D <= 1, where X is affine
/// space and no singular locus exists).
class DeltaValue {
public:
    enum class Kind { Finite, NegativeInfinity, Smooth };

    static DeltaValue finite(Int v) { return DeltaValue(Kind::Finite, v); }
    static DeltaValue negative_infinity() { return DeltaValue(Kind::NegativeInfinity, 0); }
    static DeltaValue smooth() { return DeltaValue(Kind::Smooth, 0); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    /// Only meaningful when is_finite().
    Int value() const noexcept { return value_; }

    friend bool operator==(const DeltaValue&, const DeltaValue&) = default;

private:
    DeltaValue(Kind kind, Int value) : kind_(kind), value_(value) {}
    Kind kind_;
    Int value_;
};

/// "smooth", "-inf", or the decimal integer.
std::string to_string(const DeltaValue& delta);

/// Exact rational with positive denominator, always in lowest terms.
class Rational {
public:
    Rational(Int num = 0, Int den = 1);

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }

    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    Int num_;
    Int den_;
};

/// Always "num/den", including den = 1.
std::string to_string(const Rational& q);

enum class SingularityClass {
    Smooth,
    Terminal,
    CanonicalStrict,
    LogCanonicalStrict,
    NotLogCanonical,
};

std::string_view class_name(SingularityClass klass) noexcept;
std::optional<SingularityClass> parse_class_name(std::string_view name) noexcept;

/// Classification read off delta alone.
SingularityClass class_from_delta(const DeltaValue& delta);
/// Classification read off D and p alone (the threshold criterion).
SingularityClass class_from_thresholds(Int D, std::int64_t p);

/// d - 1 - l - max_s {s - sht(s)}.
Int delta_via_jumps(const ShiftProfile& profile);
/// D - 1 - max_s {sht(p - s) + s}.
Int delta_via_reflected_shifts(const ShiftProfile& profile);

/// Smooth for D <= 1, -inf for 2 <= D < p-1, otherwise the common value of
/// both closed forms (InconsistencyError if they differ).
DeltaValue delta(const Representation& rep, std::int64_t max_p = kDefaultProfileMaxP);

/// d - 1 - max nu(M_j) over j = 0 and all j < (n_max + 1) p with p not
/// dividing j. Reports -inf when some stratum with n = 1 beats every stratum
/// with n = 0, since nu then grows linearly in n. Smooth for D <= 1.
DeltaValue delta_oracle(const Representation& rep, Int n_max);

struct TheoremBounds {
    Int upper = 0;                 // D - p
    std::optional<Rational> lower; // 2D/p - 2, only when D >= p
};

/// Precondition D >= 2.
TheoremBounds bounds(const Representation& rep);

enum class CenterLowerPolicy {
    /// Lower bound only when D >= p.
    Proven,
    /// Lower bound whenever D >= p - 1.
    Literal,
};

struct CenterBounds {
    Int dim_center = 0;
    std::optional<Rational> lower; // 2D/p - 2 + l - dim C
    Int upper = 0;                 // D - p + l - dim C
    /// Set when D = p - 1: the lower bound is then outside the proven range
    /// and is present only under CenterLowerPolicy::Literal.
    bool hypothesis_gap = false;
};

/// Bounds on the discrepancy over centers inside a closed C of the singular
/// locus with dim C = dim_center. Preconditions: D >= p - 1 and
/// 0 <= dim_center <= l.
CenterBounds center_bounds(const Representation& rep, Int dim_center,
                           CenterLowerPolicy policy = CenterLowerPolicy::Proven);

struct SingularityReport {
    Representation rep;
    Invariants inv;
    DeltaValue delta;
    SingularityClass klass;
    /// Residues s attaining max {s - sht(s)}; empty when D <= 1.
    std::vector<std::int64_t> maximizers;
    /// Absent when D <= 1.
    std::optional<TheoremBounds> bounds;
    bool cm = false;
};

/// Full report. Throws InconsistencyError if the class read from delta
/// differs from the class read from the thresholds.
SingularityReport classify(const Representation& rep, std::int64_t max_p = kDefaultProfileMaxP);

}  // namespace psing
