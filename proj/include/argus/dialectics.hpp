#ifndef ARGUS_DIALECTICS_HPP
#define ARGUS_DIALECTICS_HPP

#include <string>
#include <vector>

#include "argus/fixpoint.hpp"

namespace argus {

enum class ProofOutcome { ProponentWins, OpponentWins, DepthExceeded };
enum class ProvableStatus { ProvablyJustified, ProvablyDefeated, ProvablyArguable, Indeterminate };

std::string to_string(ProofOutcome o);
std::string to_string(ProvableStatus s);

/// A node of an argument tree. Odd levels are proponent moves; each opponent
/// child is a defeater of its parent and each proponent child strictly
/// defeats its parent.
struct ProofNode {
    bool proponent;
    int argument;
    std::vector<ProofNode> children;
};

struct ProofTree {
    ProofNode root;
    ProofOutcome outcome;
};

inline int default_depth_limit(const AttackAnalysis& analysis) {
    return 2 * analysis.size() + 1;
}

/// Plays the argument game from `arg`. Opponent children enumerate every
/// defeater not already played by the opponent on the branch; proponent
/// replies are found by backtracking search over strict defeaters. The
/// proponent wins iff every branch leaves the opponent without a move.
ProofTree prove(const AttackAnalysis& analysis, int arg, int depth_limit);

struct DialecticalReport {
    std::vector<ProvableStatus> per_argument;
    bool depth_exceeded = false;
};

/// Game status for every pool argument: provably justified roots first,
/// then arguments strictly defeated by one of them.
DialecticalReport provable_statuses(const AttackAnalysis& analysis, int depth_limit);

ProvableStatus provable_status(const AttackAnalysis& analysis, int arg, int depth_limit);

struct Disagreement {
    int argument;
    ArgStatus fixpoint_status;
    ProvableStatus game_status;
};

struct CrossCheckReport {
    std::vector<Disagreement> disagreements;
    bool depth_exceeded = false;

    bool ok() const { return disagreements.empty() && !depth_exceeded; }
};

/// Runs both engines over the same pool and reports every argument whose
/// game status disagrees with its fixpoint status. Any disagreement is a
/// bug in one of the two engines.
CrossCheckReport cross_check(const AttackAnalysis& analysis, const StatusReport& fixpoint_report,
                             int depth_limit);

} // namespace argus

#endif
