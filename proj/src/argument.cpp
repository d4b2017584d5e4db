#include "argus/argument.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace argus {

ValidationOutcome validate_argument(const CompiledSystem& sys,
                                    const std::vector<ArgumentStep>& steps) {
    Bits certains(sys.lit_count());
    for (size_t i = 0; i < steps.size(); ++i) {
        const ArgumentStep& st = steps[i];
        if (st.rule < 0 || st.rule >= sys.rule_count())
            throw std::invalid_argument("unresolved rule handle");
        const CompiledRule& r = sys.rule(st.rule);
        auto fail = [&](int cond, std::string msg) {
            return ValidationOutcome{false, cond, static_cast<int>(i), std::move(msg)};
        };
        if (std::find(r.head.begin(), r.head.end(), st.certain) == r.head.end())
            return fail(0, "certain literal is not a head disjunct of " + to_string(r.id));
        for (int p : r.strong)
            if (!certains.test(p))
                return fail(1, "strong premise " + sys.lit_name(p) + " of " + to_string(r.id) +
                                   " is not grounded");
        for (int l : r.head)
            if (l != st.certain && !certains.test(CompiledSystem::complement(l)))
                return fail(2, "head disjunct " + sys.lit_name(l) + " of " + to_string(r.id) +
                                   " is not pruned");
        if (certains.test(st.certain))
            return fail(3, "certain literal " + sys.lit_name(st.certain) + " repeats");
        certains.set(st.certain);
    }
    return {};
}

ValidationOutcome validate_argument(const CompiledSystem& sys,
                                    const std::vector<NamedStep>& steps) {
    std::vector<ArgumentStep> resolved;
    resolved.reserve(steps.size());
    for (const NamedStep& st : steps) {
        int rule = -1;
        for (int r = 0; r < sys.rule_count(); ++r)
            if (sys.rule(r).id == st.rule) {
                rule = r;
                break;
            }
        if (rule < 0)
            throw std::invalid_argument("unresolved rule " + to_string(st.rule));
        int lit = sys.lit_of(st.certain);
        if (lit < 0)
            throw std::invalid_argument("unknown literal " + to_string(st.certain));
        resolved.push_back({rule, lit});
    }
    return validate_argument(sys, resolved);
}

Argument make_argument(const CompiledSystem& sys, std::vector<ArgumentStep> steps) {
    Argument a;
    a.steps = std::move(steps);
    a.key = a.steps;
    std::sort(a.key.begin(), a.key.end());
    a.conclusions = Bits(sys.lit_count());
    a.weak_assumptions = Bits(sys.lit_count());
    for (const ArgumentStep& st : a.steps) {
        a.conclusions.set(st.certain);
        for (int w : sys.rule(st.rule).weak)
            a.weak_assumptions.set(w);
    }
    return a;
}

namespace {

// Stable canonical ordering: shorter arguments first, ties broken by key.
ArgSet finalize(ArgSet set) {
    std::sort(set.args.begin(), set.args.end(), [](const Argument& a, const Argument& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.key < b.key;
    });
    return set;
}

} // namespace

ArgSet enumerate_arguments(const CompiledSystem& sys, const EnumerationLimits& limits) {
    ArgSet out;
    std::map<std::vector<ArgumentStep>, int> seen;

    out.args.push_back(make_argument(sys, {}));
    seen.emplace(std::vector<ArgumentStep>{}, 0);

    // Candidate steps in fixed (rule, head position) order.
    std::vector<ArgumentStep> candidates;
    for (int r = 0; r < sys.rule_count(); ++r)
        for (int q : sys.rule(r).head)
            candidates.push_back({r, q});

    size_t next = 0;
    while (next < out.args.size()) { // extensions grow by one step, so sizes stay ordered
        // Copy, not reference: out.args may reallocate while extending.
        const Argument parent = out.args[next++];
        if (parent.size() >= limits.max_steps) {
            // An extension past the cap may exist; probe before flagging.
            for (const ArgumentStep& c : candidates) {
                const CompiledRule& r = sys.rule(c.rule);
                bool fits = !parent.conclusions.test(c.certain);
                for (int p : r.strong)
                    fits = fits && parent.conclusions.test(p);
                for (int l : r.head)
                    fits = fits &&
                           (l == c.certain ||
                            parent.conclusions.test(CompiledSystem::complement(l)));
                if (fits) {
                    out.truncated = true;
                    break;
                }
            }
            continue;
        }
        for (const ArgumentStep& c : candidates) {
            if (parent.conclusions.test(c.certain))
                continue; // condition 3
            const CompiledRule& r = sys.rule(c.rule);
            bool ok = true;
            for (int p : r.strong)
                if (!parent.conclusions.test(p)) {
                    ok = false; // condition 1
                    break;
                }
            if (!ok)
                continue;
            for (int l : r.head)
                if (l != c.certain && !parent.conclusions.test(CompiledSystem::complement(l))) {
                    ok = false; // condition 2
                    break;
                }
            if (!ok)
                continue;
            std::vector<ArgumentStep> key = parent.key;
            key.insert(std::upper_bound(key.begin(), key.end(), c), c);
            if (seen.count(key))
                continue;
            if (static_cast<long>(out.args.size()) >= limits.max_arguments) {
                out.truncated = true;
                return finalize(out);
            }
            std::vector<ArgumentStep> steps = parent.steps;
            steps.push_back(c);
            seen.emplace(std::move(key), static_cast<int>(out.args.size()));
            out.args.push_back(make_argument(sys, std::move(steps)));
        }
    }
    return finalize(out);
}

std::vector<Literal> conclusions(const CompiledSystem& sys, const Argument& arg) {
    std::vector<Literal> out;
    out.reserve(arg.steps.size());
    for (const ArgumentStep& st : arg.steps)
        out.push_back(sys.literal(st.certain));
    return out;
}

std::vector<NamedStep> canonical_key(const CompiledSystem& sys, const Argument& arg) {
    std::vector<NamedStep> out;
    out.reserve(arg.key.size());
    for (const ArgumentStep& st : arg.key)
        out.push_back({sys.rule(st.rule).id, sys.literal(st.certain)});
    return out;
}

} // namespace argus
