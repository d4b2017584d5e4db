#ifndef ARGUS_RENDER_HPP
#define ARGUS_RENDER_HPP

#include <iosfwd>
#include <string>

#include "argus/dialectics.hpp"

namespace argus {

/// Stable display name of a pool argument.
std::string argument_name(int index);

/// One line per argument: name, steps as agent.rule=certain, conclusions.
std::string describe_argument(const AttackAnalysis& analysis, int index);

std::string render_arguments_text(const AttackAnalysis& analysis, bool include_synthetic);
std::string render_arguments_json(const AttackAnalysis& analysis, bool include_synthetic);

// Edge lists can run to millions of lines; these write incrementally.
void render_attacks_text(std::ostream& out, const AttackAnalysis& analysis);
void render_attacks_json(std::ostream& out, const AttackAnalysis& analysis);
std::string render_attacks_text(const AttackAnalysis& analysis);

std::string render_status_text(const AttackAnalysis& analysis, const StatusReport& report);
std::string render_status_json(const AttackAnalysis& analysis, const StatusReport& report);

std::string render_tree_text(const AttackAnalysis& analysis, const ProofTree& tree);
std::string render_tree_json(const AttackAnalysis& analysis, const ProofTree& tree);

/// DOT graph: argument nodes labelled with conclusions, attack edges
/// labelled by kind, synthetic auxiliary arguments drawn as boxes.
void render_dot(std::ostream& out, const AttackAnalysis& analysis);
std::string render_dot(const AttackAnalysis& analysis);

} // namespace argus

#endif
