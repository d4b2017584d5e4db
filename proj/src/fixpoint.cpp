#include "argus/fixpoint.hpp"

#include <set>

namespace argus {

std::string to_string(ArgStatus s) {
    switch (s) {
    case ArgStatus::Justified: return "justified";
    case ArgStatus::Defeated: return "defeated";
    case ArgStatus::Arguable: return "arguable";
    }
    return "?";
}

std::string to_string(LitStatus s) {
    switch (s) {
    case LitStatus::Justified: return "justified";
    case LitStatus::Overruled: return "overruled";
    case LitStatus::Arguable: return "arguable";
    case LitStatus::Unknown: return "unknown";
    }
    return "?";
}

Bits apply_pi(const AttackAnalysis& analysis, const Bits& reference) {
    const int n = analysis.size();
    Bits dead(n);
    for (int a = 0; a < n; ++a)
        if (reference.test(a))
            dead.unite(analysis.strict_target_row(a));
    Bits out(n);
    for (int x = 0; x < n; ++x)
        if (analysis.defeater_row(x).is_subset_of(dead))
            out.set(x);
    return out;
}

FixpointResult least_fixpoint(const AttackAnalysis& analysis) {
    const int n = analysis.size();
    FixpointResult result;
    Bits current(n);
    while (true) {
        Bits next = apply_pi(analysis, current);
        std::vector<int> stage;
        for (int i = 0; i < n; ++i)
            if (next.test(i))
                stage.push_back(i);
        result.stages.push_back(std::move(stage));
        ++result.iterations;
        if (next == current)
            break;
        current = std::move(next);
    }
    result.members = current;
    return result;
}

ArgStatus argument_status(const AttackAnalysis& analysis, const FixpointResult& fix, int arg) {
    if (fix.members.test(arg))
        return ArgStatus::Justified;
    for (int y = 0; y < analysis.size(); ++y)
        if (fix.members.test(y) && analysis.strict_target_row(y).test(arg))
            return ArgStatus::Defeated;
    return ArgStatus::Arguable;
}

StatusReport classify(const AttackAnalysis& analysis) {
    FixpointResult fix = least_fixpoint(analysis);
    StatusReport report;
    report.view = analysis.view();
    report.stages = std::move(fix.stages);
    report.iterations = fix.iterations;
    report.per_argument.reserve(analysis.size());
    for (int i = 0; i < analysis.size(); ++i)
        report.per_argument.push_back(argument_status(analysis, fix, i));

    const CompiledSystem& sys = analysis.system();
    std::set<Literal> mentioned;
    for (int r = 0; r < sys.rule_count(); ++r) {
        const CompiledRule& cr = sys.rule(r);
        for (int l : cr.strong)
            mentioned.insert(sys.literal(l));
        for (int l : cr.weak)
            mentioned.insert(sys.literal(l));
        for (int l : cr.head)
            mentioned.insert(sys.literal(l));
    }
    for (const Literal& l : mentioned)
        report.per_literal.emplace(l, literal_status(analysis, report, l));
    return report;
}

LitStatus literal_status(const AttackAnalysis& analysis, const StatusReport& report,
                         const Literal& lit) {
    int l = analysis.system().lit_of(lit);
    if (l < 0)
        return LitStatus::Unknown;
    bool concluded = false;
    bool all_defeated = true;
    for (int i = 0; i < analysis.size(); ++i) {
        const Argument& arg = analysis.arguments()[i];
        if (arg.synthetic || !arg.conclusions.test(l))
            continue;
        concluded = true;
        if (report.per_argument[i] == ArgStatus::Justified)
            return LitStatus::Justified;
        all_defeated = all_defeated && report.per_argument[i] == ArgStatus::Defeated;
    }
    if (!concluded)
        return LitStatus::Unknown;
    return all_defeated ? LitStatus::Overruled : LitStatus::Arguable;
}

} // namespace argus
