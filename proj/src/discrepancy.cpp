#include "psing/discrepancy.hpp"

#include <algorithm>
#include <numeric>

namespace psing {
namespace {

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void require_singular(const Invariants& inv) {
    if (inv.D < 2) {
        throw ValidationError(Rule::Precondition, "bounds need D >= 2 (got D = " + to_string(inv.D) + ")");
    }
}

// 2D/p - 2.
Rational theorem_lower(Int D, std::int64_t p) {
    return Rational(checked::mul(2, D), p) - Rational(2);
}

}  // namespace

std::string to_string(const DeltaValue& delta) {
    switch (delta.kind()) {
        case DeltaValue::Kind::Finite: return to_string(delta.value());
        case DeltaValue::Kind::NegativeInfinity: return "-inf";
        case DeltaValue::Kind::Smooth: return "smooth";
    }
    return "?";
}

Rational::Rational(Int num, Int den) {
    if (den == 0) throw ValidationError(Rule::OutOfRange, "zero denominator");
    if (den < 0) {
        num = checked::sub(0, num);
        den = checked::sub(0, den);
    }
    Int g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator+(const Rational& other) const {
    return Rational(checked::add(checked::mul(num_, other.den_), checked::mul(other.num_, den_)),
                    checked::mul(den_, other.den_));
}

Rational Rational::operator-(const Rational& other) const {
    return *this + Rational(checked::sub(0, other.num_), other.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Int lhs = checked::mul(a.num_, b.den_);
    Int rhs = checked::mul(b.num_, a.den_);
    return lhs <=> rhs;
}

std::string to_string(const Rational& q) {
    return to_string(q.num()) + "/" + to_string(q.den());
}

std::string_view class_name(SingularityClass klass) noexcept {
    switch (klass) {
        case SingularityClass::Smooth: return "smooth";
        case SingularityClass::Terminal: return "terminal";
        case SingularityClass::CanonicalStrict: return "canonical-strict";
        case SingularityClass::LogCanonicalStrict: return "log-canonical-strict";
        case SingularityClass::NotLogCanonical: return "not-log-canonical";
    }
    return "?";
}

std::optional<SingularityClass> parse_class_name(std::string_view name) noexcept {
    for (auto klass : {SingularityClass::Smooth, SingularityClass::Terminal,
                       SingularityClass::CanonicalStrict, SingularityClass::LogCanonicalStrict,
                       SingularityClass::NotLogCanonical}) {
        if (class_name(klass) == name) return klass;
    }
    return std::nullopt;
}

SingularityClass class_from_delta(const DeltaValue& delta) {
    switch (delta.kind()) {
        case DeltaValue::Kind::Smooth: return SingularityClass::Smooth;
        case DeltaValue::Kind::NegativeInfinity: return SingularityClass::NotLogCanonical;
        case DeltaValue::Kind::Finite: break;
    }
    if (delta.value() > 0) return SingularityClass::Terminal;
    if (delta.value() == 0) return SingularityClass::CanonicalStrict;
    if (delta.value() == -1) return SingularityClass::LogCanonicalStrict;
    throw InconsistencyError("finite discrepancy " + to_string(delta.value()) + " is below -1");
}

SingularityClass class_from_thresholds(Int D, std::int64_t p) {
    if (D <= 1) return SingularityClass::Smooth;
    if (D > p) return SingularityClass::Terminal;
    if (D == p) return SingularityClass::CanonicalStrict;
    if (D == p - 1) return SingularityClass::LogCanonicalStrict;
    return SingularityClass::NotLogCanonical;
}

Int delta_via_jumps(const ShiftProfile& profile) {
    Invariants inv = invariants(profile.rep);
    Int best = *std::max_element(profile.jump.begin(), profile.jump.end());
    return checked::sub(checked::sub(inv.d - 1, inv.l), best);
}

Int delta_via_reflected_shifts(const ShiftProfile& profile) {
    const std::int64_t p = profile.rep.p();
    Invariants inv = invariants(profile.rep);
    Int best = 0;
    for (std::int64_t s = 1; s <= p - 1; ++s) {
        best = std::max(best, checked::add(profile.sht_at(p - s), s));
    }
    return checked::sub(inv.D - 1, best);
}

DeltaValue delta(const Representation& rep, std::int64_t max_p) {
    Invariants inv = invariants(rep);
    if (inv.D <= 1) return DeltaValue::smooth();
    if (inv.D < rep.p() - 1) return DeltaValue::negative_infinity();
    ShiftProfile profile = shift_profile(rep, max_p);
    Int via_jumps = delta_via_jumps(profile);
    Int via_reflected = delta_via_reflected_shifts(profile);
    if (via_jumps != via_reflected) {
        throw InconsistencyError("closed forms for delta disagree on " + format_rep_string(rep) +
                                 ": " + to_string(via_jumps) + " vs " + to_string(via_reflected));
    }
    return DeltaValue::finite(via_jumps);
}

DeltaValue delta_oracle(const Representation& rep, Int n_max) {
    if (n_max < 1) throw ValidationError(Rule::OutOfRange, "n_max must be at least 1");
    Invariants inv = invariants(rep);
    if (inv.D <= 1) return DeltaValue::smooth();
    const std::int64_t p = rep.p();

    auto best_in_period = [&](Int n) {
        Int best = nu_stratum(rep, checked::add(checked::mul(n, p), 1));
        for (std::int64_t s = 2; s <= p - 1; ++s) {
            best = std::max(best, nu_stratum(rep, checked::add(checked::mul(n, p), s)));
        }
        return best;
    };

    Int best = std::max(nu_stratum(rep, 0), best_in_period(0));
    if (best_in_period(1) > best) return DeltaValue::negative_infinity();
    for (Int n = 1; n <= n_max; ++n) best = std::max(best, best_in_period(n));
    return DeltaValue::finite(checked::sub(inv.d - 1, best));
}

TheoremBounds bounds(const Representation& rep) {
    Invariants inv = invariants(rep);
    require_singular(inv);
    TheoremBounds out;
    out.upper = checked::sub(inv.D, rep.p());
    if (inv.D >= rep.p()) out.lower = theorem_lower(inv.D, rep.p());
    return out;
}

CenterBounds center_bounds(const Representation& rep, Int dim_center, CenterLowerPolicy policy) {
    Invariants inv = invariants(rep);
    const std::int64_t p = rep.p();
    if (inv.D < 2 || inv.D < p - 1) {
        throw ValidationError(Rule::Precondition,
                              "center bounds need D >= max(2, p-1) (got D = " + to_string(inv.D) + ")");
    }
    if (dim_center < 0 || dim_center > inv.l) {
        throw ValidationError(Rule::OutOfRange, "dim C = " + to_string(dim_center) +
                                                    " is outside [0, " + to_string(inv.l) + "]");
    }
    CenterBounds out;
    out.dim_center = dim_center;
    Int shift = checked::sub(inv.l, dim_center);
    out.upper = checked::add(checked::sub(inv.D, p), shift);
    out.hypothesis_gap = inv.D == p - 1;
    if (inv.D >= p || policy == CenterLowerPolicy::Literal) {
        out.lower = theorem_lower(inv.D, p) + Rational(shift);
    }
    return out;
}

SingularityReport classify(const Representation& rep, std::int64_t max_p) {
    Invariants inv = invariants(rep);
    DeltaValue dv = delta(rep, max_p);
    SingularityClass from_delta = class_from_delta(dv);
    SingularityClass from_thresholds = class_from_thresholds(inv.D, rep.p());
    if (from_delta != from_thresholds) {
        throw InconsistencyError("classification of " + format_rep_string(rep) + " over p = " +
                                 std::to_string(rep.p()) + " disagrees: " +
                                 std::string(class_name(from_delta)) + " from delta, " +
                                 std::string(class_name(from_thresholds)) + " from D");
    }
    SingularityReport report{rep, inv, dv, from_delta, {}, std::nullopt, inv.cm};
    if (inv.D >= 2) {
        report.bounds = bounds(rep);
        ShiftProfile profile = shift_profile(rep, max_p);
        Int best = *std::max_element(profile.jump.begin(), profile.jump.end());
        for (std::int64_t s = 1; s <= rep.p() - 1; ++s) {
            if (profile.jump_at(s) == best) report.maximizers.push_back(s);
        }
    }
    return report;
}

}  // namespace psing
