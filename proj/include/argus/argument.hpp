#ifndef ARGUS_ARGUMENT_HPP
#define ARGUS_ARGUMENT_HPP

#include <string>
#include <vector>

#include "argus/compiled.hpp"

namespace argus {

/// One derivation step: a rule together with the head disjunct the argument
/// commits it to. Rule handles index the analysis rule pool (real rules
/// first, synthetic rules appended).
struct ArgumentStep {
    int rule;
    int certain;

    auto operator<=>(const ArgumentStep&) const = default;
};

/// A grounded, uniquely-read, non-redundant rule sequence. `steps` is a
/// valid derivation order; `key` is the same steps sorted, identifying the
/// argument up to reordering.
struct Argument {
    std::vector<ArgumentStep> steps;
    std::vector<ArgumentStep> key;
    Bits conclusions;      // certain literal of every step
    Bits weak_assumptions; // union of the step rules' weak premises
    bool synthetic = false;
    std::vector<int> thin_targets; // arguments this synthetic argument attacks

    bool empty() const { return steps.empty(); }
    int size() const { return static_cast<int>(steps.size()); }
};

/// Display form used by serializers and tests.
struct NamedStep {
    RuleId rule;
    Literal certain;

    auto operator<=>(const NamedStep&) const = default;
};

struct ValidationOutcome {
    bool ok = true;
    int condition = 0; // 1..3 per the argument conditions, 0 = certain not in head
    int step = -1;     // first offending step
    std::string message;
};

/// Checks the argument conditions directly against their definitions:
/// (1) every strong premise is some earlier certain, (2) every unselected
/// head disjunct is pruned by an earlier complementary certain, (3) no two
/// steps share a certain literal. Reports the first violation.
ValidationOutcome validate_argument(const CompiledSystem& sys,
                                    const std::vector<ArgumentStep>& steps);

/// Name-level wrapper. Throws std::invalid_argument on an unresolved rule
/// or a certain literal foreign to the system.
ValidationOutcome validate_argument(const CompiledSystem& sys,
                                    const std::vector<NamedStep>& steps);

struct EnumerationLimits {
    int max_steps = 32;
    long max_arguments = 100000;
};

struct ArgSet {
    std::vector<Argument> args; // canonical order: by (size, key); args[0] is empty
    bool truncated = false;
};

/// Exhaustively enumerates all valid arguments over the union of the
/// agents' rules, one representative per canonical key, always including
/// the empty argument. Deterministic for fixed system and limits. A hit
/// bound flags the result truncated instead of silently dropping members.
ArgSet enumerate_arguments(const CompiledSystem& sys, const EnumerationLimits& limits = {});

/// The certain literals of all steps; empty argument yields the empty set.
std::vector<Literal> conclusions(const CompiledSystem& sys, const Argument& arg);

/// Order-insensitive identity: equal iff the arguments contain the same
/// (rule, certain) pairs as sets.
std::vector<NamedStep> canonical_key(const CompiledSystem& sys, const Argument& arg);

Argument make_argument(const CompiledSystem& sys, std::vector<ArgumentStep> steps);

} // namespace argus

#endif
