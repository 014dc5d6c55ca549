// Structured outcome of one executable theorem check.
#pragma once

#include <optional>
#include <string>

#include "polyseq.hpp"

namespace indpoly {

enum class PremiseStatus { Fails, Holds, Unknown };

inline const char* to_string(PremiseStatus s) {
    switch (s) {
        case PremiseStatus::Fails: return "fails";
        case PremiseStatus::Holds: return "holds";
        default: return "unknown";
    }
}

// The first comparison that failed: left <= right was expected at index k.
struct Violation {
    int index = 0;
    BigInt left;
    BigInt right;

    bool operator==(const Violation&) const = default;
};

struct Verdict {
    std::string statement_id;
    PremiseStatus premise = PremiseStatus::Unknown;
    bool conclusion_holds = false;
    std::optional<Violation> first_violation;  // present iff !conclusion_holds
    std::string notes;

    bool premise_holds() const { return premise == PremiseStatus::Holds; }
};

}  // namespace indpoly
