#include "argus/random_system.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace argus {

namespace {

class Draw {
public:
    explicit Draw(uint64_t seed) : rng_(seed) {}

    int below(int n) { return static_cast<int>(rng_() % static_cast<uint64_t>(n)); }
    bool percent(int p) { return below(100) < p; }

private:
    std::mt19937_64 rng_;
};

Literal random_literal(Draw& d, int atoms) {
    return Literal{"a" + std::to_string(d.below(atoms)), d.percent(50)};
}

} // namespace

ArgumentationSystem generate_random_system(uint64_t seed, const RandomSystemParams& params) {
    Draw draw(seed);
    ArgumentationSystem sys;

    for (int a = 0; a < params.agents; ++a) {
        Agent agent;
        agent.id = "ag" + std::to_string(a);
        int span = params.max_rules_per_agent - params.min_rules_per_agent + 1;
        int rules = params.min_rules_per_agent + draw.below(std::max(1, span));
        for (int r = 0; r < rules; ++r) {
            Rule rule;
            rule.id = RuleId{agent.id, "r" + std::to_string(r + 1)};
            int head_width = 1;
            if (params.allow_disjunction && params.max_head > 1 && draw.percent(40))
                head_width = 2 + draw.below(params.max_head - 1);
            head_width = std::min(head_width, params.atoms); // one head slot per atom
            while (static_cast<int>(rule.head.size()) < head_width) {
                Literal l = random_literal(draw, params.atoms);
                bool clashes = false;
                for (const Literal& h : rule.head)
                    clashes = clashes || h == l || h == complement(l);
                if (!clashes)
                    rule.head.push_back(l);
            }
            if (!draw.percent(params.fact_percent)) {
                int strong = draw.below(params.max_strong + 1);
                int weak = draw.below(params.max_weak + 1);
                auto add = [&](std::vector<Literal>& out, int count) {
                    while (static_cast<int>(out.size()) < count) {
                        Literal l = random_literal(draw, params.atoms);
                        if (std::find(out.begin(), out.end(), l) == out.end())
                            out.push_back(l);
                    }
                };
                add(rule.strong_premises, strong);
                add(rule.weak_premises, weak);
            }
            agent.rules.push_back(std::move(rule));
        }
        // Preferences follow declaration order, which acts as the hidden
        // total order; the declared pairs can never close into a cycle.
        for (size_t i = 0; i < agent.rules.size(); ++i)
            for (size_t j = i + 1; j < agent.rules.size(); ++j)
                if (draw.percent(params.rule_pref_percent))
                    agent.rule_prefs.add(agent.rules[i].id, agent.rules[j].id);
        sys.agents.push_back(std::move(agent));
    }

    if (params.inject_subsumption && sys.agents.size() >= 2) {
        // Copy one rule across agents and widen the copy's head so the copy
        // thins the original.
        int from = draw.below(static_cast<int>(sys.agents.size()));
        int to = (from + 1) % static_cast<int>(sys.agents.size());
        Agent& donor = sys.agents[from];
        Agent& taker = sys.agents[to];
        const Rule& base = donor.rules[draw.below(static_cast<int>(donor.rules.size()))];
        Rule wide;
        wide.id = RuleId{taker.id, "w" + std::to_string(taker.rules.size() + 1)};
        wide.strong_premises = base.strong_premises;
        wide.weak_premises = base.weak_premises;
        wide.head = base.head;
        for (int tries = 0; tries < 64 && wide.head.size() == base.head.size(); ++tries) {
            Literal extra = random_literal(draw, params.atoms);
            bool clashes = false;
            for (const Literal& h : wide.head)
                clashes = clashes || h == extra || h == complement(extra);
            if (!clashes)
                wide.head.push_back(extra);
        }
        if (wide.head.size() > base.head.size())
            taker.rules.push_back(std::move(wide));
    }

    for (size_t i = 0; i < sys.agents.size(); ++i)
        for (size_t j = i + 1; j < sys.agents.size(); ++j)
            if (draw.percent(params.agent_pref_percent))
                sys.agent_prefs.add(sys.agents[i].id, sys.agents[j].id);

    if (sys.agent_prefs.validate())
        throw std::logic_error("generated agent preferences formed a cycle");
    for (const Agent& a : sys.agents)
        if (a.rule_prefs.validate())
            throw std::logic_error("generated rule preferences formed a cycle");
    return sys;
}

} // namespace argus
