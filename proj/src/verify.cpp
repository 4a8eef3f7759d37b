#include "psing/verify.hpp"


namespace psing {
namespace {

struct Failed {
    std::string property;
    std::string detail;
};

class Sweep {
public:
    explicit Sweep(VerifySummary& summary) : summary_(summary) {
        for (const auto& name : verify_property_names()) summary_.tallies.push_back({name, 0});
    }

    void check(const std::string& property, bool holds, const std::string& detail) {
        if (!holds) throw Failed{property, detail};
        for (auto& tally : summary_.tallies) {
            if (tally.name == property) ++tally.instances;
        }
    }

    void run(const Representation& rep, Int n_max) {
        const std::int64_t p = rep.p();
        const Invariants inv = invariants(rep);

        for (std::int64_t s = 1; s <= p - 1; ++s) {
            check("lemma-sht-reflection", check_lemma_sht(rep, s), "s = " + std::to_string(s));
            check("lemma-sht-upper", check_lemma_upper(rep, s), "s = " + std::to_string(s));
            Int base = sht(rep, s);
            for (Int n = 1; n <= n_max; ++n) {
                Int j = checked::add(checked::mul(n, p), s);
                check("sht-periodicity", sht(rep, j) == checked::add(checked::mul(n, inv.D), base),
                      "j = " + to_string(j));
            }
        }
        for (Int j = 0; j < checked::mul(n_max + 1, p); ++j) {
            if (j != 0 && j % p == 0) continue;
            check("nu-two-forms", nu_from_integral_exponent(rep, j) == nu_from_residue(rep, j),
                  "j = " + to_string(j));
        }

        if (inv.D < 2) return;
        const DeltaValue dv = delta(rep);
        if (inv.D >= p - 1) {
            ShiftProfile profile = shift_profile(rep);
            check("delta-dual-formula",
                  delta_via_jumps(profile) == delta_via_reflected_shifts(profile), "");
        }
        for (Int n = 1; n <= n_max; ++n) {
            DeltaValue via_oracle = delta_oracle(rep, n);
            check("delta-oracle", via_oracle == dv,
                  "n_max = " + to_string(n) + ": oracle " + to_string(via_oracle) + ", closed form " +
                      to_string(dv));
        }
        check("negative-infinity-criterion",
              (dv.kind() == DeltaValue::Kind::NegativeInfinity) == (inv.D < p - 1),
              "delta = " + to_string(dv));
        if (dv.is_finite()) {
            check("delta-at-least-minus-one", dv.value() >= -1, "delta = " + to_string(dv));
            TheoremBounds b = bounds(rep);
            check("upper-bound", dv.value() <= b.upper,
                  "delta = " + to_string(dv) + " > " + to_string(b.upper));
            if (b.lower) {
                check("lower-bound", *b.lower <= Rational(dv.value()),
                      "delta = " + to_string(dv) + " < " + to_string(*b.lower));
            }
        }
        check("class-thresholds", class_from_delta(dv) == class_from_thresholds(inv.D, p),
              "delta = " + to_string(dv) + ", D = " + to_string(inv.D));
        if (inv.D >= p) {
            check("canonical-when-D-at-least-p", dv.is_finite() && dv.value() >= 0,
                  "delta = " + to_string(dv));
        }
    }

private:
    VerifySummary& summary_;
};

}  // namespace

const std::vector<std::string>& verify_property_names() {
    static const std::vector<std::string> names{
        "lemma-sht-reflection", "lemma-sht-upper",   "sht-periodicity",
        "nu-two-forms",         "delta-dual-formula", "delta-oracle",
        "negative-infinity-criterion", "delta-at-least-minus-one", "upper-bound",
        "lower-bound",          "class-thresholds",  "canonical-when-D-at-least-p",
    };
    return names;
}

VerifySummary run_verification(const std::vector<Prime>& primes, std::int64_t d_max, Int n_max,
                               std::uint64_t max_partitions) {
    if (n_max < 1) throw ValidationError(Rule::OutOfRange, "n_max must be at least 1");
    VerifySummary summary;
    Sweep sweep(summary);
    std::vector<TableRow> universe = build_table(primes, d_max, max_partitions);
    for (const auto& row : universe) {
        try {
            sweep.run(row.rep(), n_max);
        } catch (const Failed& failed) {
            summary.failure = Counterexample{failed.property, row.rep().p(),
                                             format_rep_string(row.rep()), failed.detail};
            return summary;
        } catch (const InconsistencyError& e) {
            summary.failure = Counterexample{"internal-consistency", row.rep().p(),
                                             format_rep_string(row.rep()), e.what()};
            return summary;
        }
        ++summary.representations;
    }
    return summary;
}

}  // namespace psing
