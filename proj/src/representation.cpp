#include "psing/representation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace psing {

std::vector<std::int64_t> Representation::parts(std::size_t max_parts) const {
    if (num_parts_ > static_cast<Int>(max_parts)) {
        throw ValidationError(Rule::OutOfRange,
                              "representation has " + to_string(num_parts_) +
                                  " parts, more than can be expanded");
    }
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(num_parts_));
    for (const auto& run : runs_) {
        out.insert(out.end(), static_cast<std::size_t>(run.multiplicity), run.size);
    }
    return out;
}

Representation make_representation(const Prime& p, std::vector<PartRun> runs) {
    if (runs.empty()) {
        throw ValidationError(Rule::EmptyParts, "representation must have at least one part");
    }
    std::map<std::int64_t, Int, std::greater<>> merged;
    for (const auto& run : runs) {
        if (run.size < 1) {
            throw ValidationError(Rule::PartBelowOne,
                                  "part " + std::to_string(run.size) + " is below 1");
        }
        if (run.size > p.value()) {
            throw ValidationError(Rule::PartExceedsP,
                                  "part " + std::to_string(run.size) + " exceeds p = " +
                                      std::to_string(p.value()));
        }
        if (run.multiplicity < 1) {
            throw ValidationError(Rule::Syntax, "multiplicity must be positive");
        }
        auto& slot = merged[run.size];
        slot = checked::add(slot, run.multiplicity);
    }
    std::vector<PartRun> canonical;
    canonical.reserve(merged.size());
    Int num_parts = 0;
    Int dimension = 0;
    for (const auto& [size, mult] : merged) {
        canonical.push_back({size, mult});
        num_parts = checked::add(num_parts, mult);
        dimension = checked::add(dimension, checked::mul(mult, size));
    }
    return Representation(p, std::move(canonical), num_parts, dimension);
}

Representation parse_representation(Int p, std::span<const Int> parts) {
    Prime prime = Prime::make(p);
    if (parts.empty()) {
        throw ValidationError(Rule::EmptyParts, "representation must have at least one part");
    }
    std::vector<PartRun> runs;
    runs.reserve(parts.size());
    for (Int part : parts) {
        if (part < 1) {
            throw ValidationError(Rule::PartBelowOne, "part " + to_string(part) + " is below 1");
        }
        if (part > p) {
            throw ValidationError(Rule::PartExceedsP, "part " + to_string(part) +
                                                          " exceeds p = " + to_string(p));
        }
        runs.push_back({static_cast<std::int64_t>(part), 1});
    }
    return make_representation(prime, std::move(runs));
}

std::vector<PartRun> parse_rep_string(std::string_view rep_string) {
    std::string text;
    for (char c : rep_string) {
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    }
    if (text.empty()) {
        throw ValidationError(Rule::EmptyParts, "representation must have at least one part");
    }
    auto syntax = [&](const std::string& why) {
        return ValidationError(Rule::Syntax,
                               "bad representation \"" + std::string(rep_string) + "\": " + why);
    };
    auto parse_number = [&](std::string_view token, const char* what) {
        if (token.empty() || token.front() == '+' || token.front() == '-') {
            throw syntax(std::string("expected ") + what);
        }
        auto value = parse_int(token);
        if (!value) throw syntax(std::string("invalid ") + what + " \"" + std::string(token) + "\"");
        return *value;
    };

    std::vector<PartRun> runs;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        std::string_view term = rest.substr(0, comma);
        auto caret = term.find('^');
        Int size = parse_number(term.substr(0, caret), "part size");
        Int mult = 1;
        if (caret != std::string_view::npos) {
            mult = parse_number(term.substr(caret + 1), "multiplicity");
            if (mult < 1) throw syntax("multiplicity must be positive");
        }
        if (size > std::numeric_limits<std::int64_t>::max()) {
            throw ValidationError(Rule::PartExceedsP, "part " + to_string(size) + " is too large");
        }
        if (size < 1) {
            throw ValidationError(Rule::PartBelowOne, "part " + to_string(size) + " is below 1");
        }
        runs.push_back({static_cast<std::int64_t>(size), mult});
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return runs;
}

Representation parse_representation(Int p, std::string_view rep_string) {
    Prime prime = Prime::make(p);
    return make_representation(prime, parse_rep_string(rep_string));
}

std::string format_rep_string(const Representation& rep) {
    std::string out;
    for (const auto& run : rep.runs()) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(run.size);
        if (run.multiplicity != 1) {
            out.push_back('^');
            out += to_string(run.multiplicity);
        }
    }
    return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.prime() != b.prime()) {
        throw ValidationError(Rule::Precondition, "direct sum needs a common prime");
    }
    std::vector<PartRun> runs(a.runs().begin(), a.runs().end());
    runs.insert(runs.end(), b.runs().begin(), b.runs().end());
    return make_representation(a.prime(), std::move(runs));
}

Int indecomposable_D(std::int64_t size) {
    // (size - 1) * size is even, so halve whichever factor is even first.
    Int n = size;
    Int m = n - 1;
    return (n % 2 == 0) ? checked::mul(n / 2, m) : checked::mul(n, m / 2);
}

Invariants invariants(const Representation& rep) {
    Invariants inv;
    inv.d = rep.dimension();
    inv.l = rep.num_parts();
    inv.codim = checked::sub(inv.d, inv.l);
    for (const auto& run : rep.runs()) {
        inv.D = checked::add(inv.D, checked::mul(run.multiplicity, indecomposable_D(run.size)));
    }
    inv.cm = inv.codim <= 2;
    return inv;
}

}  // namespace psing
