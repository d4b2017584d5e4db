#ifndef ARGUS_FIXPOINT_HPP
#define ARGUS_FIXPOINT_HPP

#include <map>
#include <string>
#include <vector>

#include "argus/attacks.hpp"

namespace argus {

enum class ArgStatus { Justified, Defeated, Arguable };
enum class LitStatus { Justified, Overruled, Arguable, Unknown };

std::string to_string(ArgStatus s);
std::string to_string(LitStatus s);

/// One application of the operator: the members of the pool whose defeaters
/// are all strictly defeated by some argument in `reference`.
Bits apply_pi(const AttackAnalysis& analysis, const Bits& reference);

struct FixpointResult {
    Bits members;                         // the least fixpoint
    std::vector<std::vector<int>> stages; // F(0), F(1), ..., up to stabilization
    int iterations = 0;                   // applications performed until F(i) = F(i-1)
};

/// Ascending iteration from the empty set until it stabilizes.
FixpointResult least_fixpoint(const AttackAnalysis& analysis);

struct StatusReport {
    View view;
    std::vector<ArgStatus> per_argument;          // by pool index
    std::map<Literal, LitStatus> per_literal;     // every literal mentioned by the system
    std::vector<std::vector<int>> stages;
    int iterations = 0;
};

/// Full classification of the pool plus the literal lifting. Synthetic
/// auxiliary arguments receive argument statuses but never support or block
/// a literal.
StatusReport classify(const AttackAnalysis& analysis);

ArgStatus argument_status(const AttackAnalysis& analysis, const FixpointResult& fix, int arg);

/// Lifts argument statuses to one literal. Unknown when no non-synthetic
/// argument concludes it.
LitStatus literal_status(const AttackAnalysis& analysis, const StatusReport& report,
                         const Literal& lit);

} // namespace argus

#endif
