#ifndef ARGUS_RANDOM_SYSTEM_HPP
#define ARGUS_RANDOM_SYSTEM_HPP

#include <cstdint>

#include "argus/system.hpp"

namespace argus {

struct RandomSystemParams {
    int atoms = 6;
    int agents = 2;
    int min_rules_per_agent = 2;
    int max_rules_per_agent = 5;
    int max_strong = 2;
    int max_weak = 1;
    int max_head = 2;            // effective head width is 1 unless disjunction is on
    bool allow_disjunction = true;
    bool inject_subsumption = false; // add a cross-agent pair guaranteed to thin
    int fact_percent = 35;           // chance that a rule has no premises
    int rule_pref_percent = 20;      // chance per candidate rule pair
    int agent_pref_percent = 40;     // chance per candidate agent pair
};

/// Deterministic in the seed; the result always passes validation.
/// Preferences are drawn along a hidden total order, so they are acyclic by
/// construction.
ArgumentationSystem generate_random_system(uint64_t seed, const RandomSystemParams& params = {});

} // namespace argus

#endif
