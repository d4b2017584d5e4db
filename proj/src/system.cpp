#include "argus/system.hpp"

#include <sstream>

namespace argus {

const Agent* ArgumentationSystem::find_agent(const std::string& id) const {
    for (const Agent& a : agents)
        if (a.id == id)
            return &a;
    return nullptr;
}

const Rule* ArgumentationSystem::find_rule(const RuleId& id) const {
    const Agent* a = find_agent(id.agent);
    if (!a)
        return nullptr;
    for (const Rule& r : a->rules)
        if (r.id.local == id.local)
            return &r;
    return nullptr;
}

std::string to_string(const RuleId& id) { return id.agent + "." + id.local; }

namespace {

void print_rule(std::ostringstream& out, const Rule& r) {
    out << "  " << r.id.local << ":";
    bool first = true;
    for (const Literal& l : r.strong_premises) {
        out << (first ? " " : ", ") << to_string(l);
        first = false;
    }
    for (const Literal& l : r.weak_premises) {
        out << (first ? " ~" : ", ~") << to_string(l);
        first = false;
    }
    out << " =>";
    first = true;
    for (const Literal& l : r.head) {
        out << (first ? " " : " | ") << to_string(l);
        first = false;
    }
    out << ".\n";
}

} // namespace

std::string print_system(const ArgumentationSystem& sys) {
    std::ostringstream out;
    bool first_agent = true;
    for (const Agent& a : sys.agents) {
        if (!first_agent)
            out << "\n";
        first_agent = false;
        out << "agent " << a.id << " {\n";
        for (const Rule& r : a.rules)
            print_rule(out, r);
        for (const auto& [s, g] : a.rule_prefs.pairs())
            out << "  prefer " << s.local << " > " << g.local << ".\n";
        out << "}\n";
    }
    for (const auto& [s, g] : sys.agent_prefs.pairs())
        out << "prefer " << s << " > " << g << ".\n";
    return out.str();
}

} // namespace argus
