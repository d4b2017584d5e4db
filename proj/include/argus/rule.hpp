#ifndef ARGUS_RULE_HPP
#define ARGUS_RULE_HPP

#include <compare>
#include <string>
#include <vector>

#include "argus/literal.hpp"

namespace argus {

/// Agent-qualified rule name. Two agents may reuse the same local name.
struct RuleId {
    std::string agent;
    std::string local;

    auto operator<=>(const RuleId&) const = default;
};

std::string to_string(const RuleId& id);

/// A defeasible clause: strong premises, weak (default-negated) premises,
/// and a disjunctive head of at least one literal.
struct Rule {
    RuleId id;
    std::vector<Literal> strong_premises;
    std::vector<Literal> weak_premises;
    std::vector<Literal> head;

    bool operator==(const Rule&) const = default;
};

struct RuleParts {
    const std::vector<Literal>& strong;
    const std::vector<Literal>& weak;
    const std::vector<Literal>& head;
};

/// The condition/conclusion split of a rule. The full condition set is
/// strong ∪ weak.
inline RuleParts rule_parts(const Rule& r) {
    return RuleParts{r.strong_premises, r.weak_premises, r.head};
}

} // namespace argus

#endif
