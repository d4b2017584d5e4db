#ifndef ARGUS_SYSTEM_HPP
#define ARGUS_SYSTEM_HPP

#include <string>
#include <vector>

#include "argus/preference.hpp"
#include "argus/rule.hpp"

namespace argus {

struct Agent {
    std::string id;
    std::vector<Rule> rules;
    PreferenceHierarchy<RuleId> rule_prefs;

    bool operator==(const Agent&) const = default;
};

/// A set of agents plus a global preference hierarchy between them.
/// Validated systems are immutable and safe to share across threads.
struct ArgumentationSystem {
    std::vector<Agent> agents;
    PreferenceHierarchy<std::string> agent_prefs;

    bool operator==(const ArgumentationSystem&) const = default;

    const Agent* find_agent(const std::string& id) const;
    const Rule* find_rule(const RuleId& id) const;
};

/// Canonical serializer: agents and rules in declaration order, preference
/// pairs as declared. parse_system(print_system(s)) is structurally equal
/// to s for every valid s.
std::string print_system(const ArgumentationSystem& sys);

} // namespace argus

#endif
