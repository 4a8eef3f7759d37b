#include "psing/errors.hpp"

namespace psing {

std::string_view rule_name(Rule rule) noexcept {
    switch (rule) {
        case Rule::NotPrime: return "NotPrime";
        case Rule::EmptyParts: return "EmptyParts";
        case Rule::PartBelowOne: return "PartBelowOne";
        case Rule::PartExceedsP: return "PartExceedsP";
        case Rule::DivisibleJump: return "DivisibleJump";
        case Rule::OutOfRange: return "OutOfRange";
        case Rule::Syntax: return "Syntax";
        case Rule::Precondition: return "Precondition";
    }
    return "Unknown";
}

}  // namespace psing
