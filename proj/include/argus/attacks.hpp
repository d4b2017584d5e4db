#ifndef ARGUS_ATTACKS_HPP
#define ARGUS_ATTACKS_HPP

#include <string>
#include <vector>

#include "argus/argument.hpp"

namespace argus {

enum class View { Credulous, Skeptical, GeneralizedSkeptical };

std::string to_string(View v);
bool view_from_string(const std::string& s, View& out);

enum class AttackKind { Undercut, Rebut, Thinning };

std::string to_string(AttackKind k);

/// The (rule, literal) pairs establishing an attack.
struct AttackWitness {
    RuleId attacker_rule;
    Literal attacker_literal;
    RuleId target_rule;
    Literal target_literal;
};

struct AttackEdge {
    int attacker;
    int target;
    AttackKind kind;
    AttackWitness witness;
};

/// Rule-level thinning: r1 and r2 owned by different agents, equal condition
/// sets (strong and weak parts separately), and head(r2) a strict subset of
/// head(r1).
bool thins(const Rule& r1, const Rule& r2);

/// One synthetic single-head rule per residual disjunct of a thinning pair.
/// Each result is an alias of r1 for preference purposes (it keeps r1's
/// agent). Throws std::invalid_argument unless thins(r1, r2).
std::vector<Rule> auxiliary_rules(const Rule& r1, const Rule& r2);

/// Reduction of an intersecting (non-nested) similar pair: if the committed
/// disjunct lies in the shared part, the residual of the foreign rule drives
/// the attack; if it lies outside the foreign head, the conflict dissolves.
/// Throws std::invalid_argument unless the rules are similar and non-nested.
std::vector<Rule> generalized_reduction(const Rule& rule_c, const Literal& certain_c,
                                        const Rule& rule_d);

/// All attack relations over an enumerated argument set under one view.
/// Skeptical and generalized views extend the pool with synthetic auxiliary
/// arguments; those participate fully in the relations but are flagged.
class AttackAnalysis {
public:
    AttackAnalysis(const CompiledSystem& sys, const ArgSet& base, View view);

    View view() const { return view_; }
    const CompiledSystem& system() const { return *sys_; }

    const std::vector<Argument>& arguments() const { return args_; }
    int size() const { return static_cast<int>(args_.size()); }
    int real_count() const { return real_count_; }

    /// Rule table covering synthetic handles as well as real ones.
    const CompiledRule& rule(int handle) const;
    int pool_rule_count() const;

    bool undercuts(int a, int b) const { return undercut_[a].test(b); }
    bool rebuts(int a, int b) const { return rebut_[a].test(b); }
    bool defeats(int a, int b) const { return defeat_[a].test(b); }
    bool strictly_defeats(int a, int b) const { return defeat_[a].test(b) && !defeat_[b].test(a); }

    const std::vector<int>& defeaters_of(int x) const { return defeaters_[x]; }
    const std::vector<int>& strict_defeaters_of(int x) const { return strict_defeaters_[x]; }
    const Bits& defeater_row(int x) const { return attackers_[x]; }
    const Bits& strict_target_row(int y) const { return strict_targets_[y]; }

    /// Materialized on first use; pools with dense rebut relations can imply
    /// millions of edges.
    const std::vector<AttackEdge>& edges() const;
    AttackWitness witness(int attacker, int target, AttackKind kind) const;

    /// Thinning attacks as pool indices: attacker argument, target argument,
    /// synthetic rule with its residual disjunct, thinned rule with the
    /// disjunct the target committed to.
    struct ThinningAttack {
        int attacker;
        int target;
        int rule;
        int literal;
        int target_rule;
        int target_literal;
    };
    const std::vector<ThinningAttack>& thinning_attacks() const { return thin_attacks_; }

    /// The preference gate of the rebut relation, on pool rule handles.
    bool rebut_allowed(int attacker_rule, int target_rule) const {
        return rebut_gate(attacker_rule, target_rule);
    }

    /// Index of the canonical empty argument.
    int empty_index() const { return empty_index_; }

    int find(const std::vector<ArgumentStep>& key) const;

private:
    void synthesize_auxiliaries();
    void build_relations();
    bool rebut_gate(int attacker_rule, int target_rule) const;
    bool rebut_pair(int a, int b) const;

    const CompiledSystem* sys_;
    View view_;
    std::vector<Argument> args_;
    int real_count_ = 0;
    int empty_index_ = -1;
    std::vector<CompiledRule> synth_rules_;
    std::vector<Bits> undercut_;        // undercut_[a].test(b): a undercuts b
    std::vector<Bits> rebut_;           // gate already applied
    std::vector<Bits> defeat_;          // defeat_[a].test(b): a defeats b
    std::vector<Bits> attackers_;       // attackers_[x].test(y): y defeats x
    std::vector<Bits> strict_targets_;  // strict_targets_[y].test(x): y strictly defeats x
    std::vector<std::vector<int>> defeaters_;
    std::vector<std::vector<int>> strict_defeaters_;
    std::vector<ThinningAttack> thin_attacks_;
    mutable bool edges_built_ = false;
    mutable std::vector<AttackEdge> edges_;
};

/// Deterministic edge list for rendering and the graph subcommand.
inline const std::vector<AttackEdge>& attack_graph(const AttackAnalysis& analysis) {
    return analysis.edges();
}

} // namespace argus

#endif
