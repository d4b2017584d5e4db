#ifndef ARGUS_COMPILED_HPP
#define ARGUS_COMPILED_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "argus/system.hpp"

namespace argus {

/// Fixed-capacity bitset used for literal sets and argument index sets.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : words_((nbits + 63) / 64, 0) {}

    void set(int i) { words_[i / 64] |= uint64_t{1} << (i % 64); }
    void reset(int i) { words_[i / 64] &= ~(uint64_t{1} << (i % 64)); }
    bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    bool intersects(const Bits& o) const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }

    bool is_subset_of(const Bits& o) const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    void unite(const Bits& o) {
        for (size_t w = 0; w < words_.size(); ++w)
            words_[w] |= o.words_[w];
    }

    bool none() const {
        for (uint64_t w : words_)
            if (w)
                return false;
        return true;
    }

    bool operator==(const Bits&) const = default;

private:
    std::vector<uint64_t> words_;
};

/// Engine-side rule: literals interned as small integers. Synthetic rules
/// created during attack analysis alias a real rule for preference lookups.
struct CompiledRule {
    RuleId id;
    int agent = -1;
    std::vector<int> strong;
    std::vector<int> weak;
    std::vector<int> head;
    int alias_of = -1; // real-rule index this rule stands in for, or -1
    bool synthetic = false;
};

/// Immutable indexed view of a validated system. Literal encoding:
/// lit = 2*atom + negated, complement flips the low bit.
class CompiledSystem {
public:
    explicit CompiledSystem(const ArgumentationSystem& sys);

    const ArgumentationSystem& source() const { return *source_; }

    int atom_count() const { return static_cast<int>(atoms_.size()); }
    int lit_count() const { return 2 * atom_count(); }
    int rule_count() const { return static_cast<int>(rules_.size()); }
    int agent_count() const { return static_cast<int>(agent_ids_.size()); }

    const std::vector<CompiledRule>& rules() const { return rules_; }
    const CompiledRule& rule(int r) const { return rules_[r]; }
    const std::string& agent_id(int a) const { return agent_ids_[a]; }

    static int complement(int lit) { return lit ^ 1; }
    int lit_of(const Literal& l) const;
    Literal literal(int lit) const { return Literal{atoms_[lit / 2], (lit & 1) != 0}; }
    std::string lit_name(int lit) const { return to_string(literal(lit)); }

    bool rule_preferred(int r, int s) const { return rule_pref_.count({r, s}) != 0; }
    bool agent_preferred(int a, int b) const { return agent_pref_.count({a, b}) != 0; }
    bool agents_comparable(int a, int b) const {
        return agent_preferred(a, b) || agent_preferred(b, a);
    }

    Bits lit_set(const std::vector<int>& lits) const;

private:
    int intern_atom(const std::string& name);
    int intern_lit(const Literal& l);

    const ArgumentationSystem* source_;
    std::vector<std::string> atoms_;
    std::map<std::string, int> atom_index_;
    std::vector<std::string> agent_ids_;
    std::vector<CompiledRule> rules_;
    std::set<std::pair<int, int>> rule_pref_;  // transitive closure, engine indices
    std::set<std::pair<int, int>> agent_pref_; // transitive closure, agent indices
};

} // namespace argus

#endif
