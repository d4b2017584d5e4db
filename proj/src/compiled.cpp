#include "argus/compiled.hpp"

#include <stdexcept>

namespace argus {

CompiledSystem::CompiledSystem(const ArgumentationSystem& sys) : source_(&sys) {
    std::map<RuleId, int> rule_index;
    for (const Agent& agent : sys.agents) {
        int agent_idx = static_cast<int>(agent_ids_.size());
        agent_ids_.push_back(agent.id);
        for (const Rule& r : agent.rules) {
            CompiledRule cr;
            cr.id = r.id;
            cr.agent = agent_idx;
            for (const Literal& l : r.strong_premises)
                cr.strong.push_back(intern_lit(l));
            for (const Literal& l : r.weak_premises)
                cr.weak.push_back(intern_lit(l));
            for (const Literal& l : r.head)
                cr.head.push_back(intern_lit(l));
            rule_index[r.id] = static_cast<int>(rules_.size());
            rules_.push_back(std::move(cr));
        }
    }
    for (const Agent& agent : sys.agents) {
        for (const Rule& a : agent.rules)
            for (const Rule& b : agent.rules)
                if (agent.rule_prefs.prefers(a.id, b.id))
                    rule_pref_.insert({rule_index.at(a.id), rule_index.at(b.id)});
    }
    for (int a = 0; a < agent_count(); ++a)
        for (int b = 0; b < agent_count(); ++b)
            if (a != b && sys.agent_prefs.prefers(agent_ids_[a], agent_ids_[b]))
                agent_pref_.insert({a, b});
}

int CompiledSystem::intern_atom(const std::string& name) {
    auto [it, inserted] = atom_index_.try_emplace(name, static_cast<int>(atoms_.size()));
    if (inserted)
        atoms_.push_back(name);
    return it->second;
}

int CompiledSystem::intern_lit(const Literal& l) {
    return 2 * intern_atom(l.atom) + (l.negated ? 1 : 0);
}

int CompiledSystem::lit_of(const Literal& l) const {
    auto it = atom_index_.find(l.atom);
    if (it == atom_index_.end())
        return -1;
    return 2 * it->second + (l.negated ? 1 : 0);
}

Bits CompiledSystem::lit_set(const std::vector<int>& lits) const {
    Bits b(lit_count());
    for (int l : lits)
        b.set(l);
    return b;
}

} // namespace argus
