#include "argus/attacks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace argus {

std::string to_string(View v) {
    switch (v) {
    case View::Credulous: return "credulous";
    case View::Skeptical: return "skeptical";
    case View::GeneralizedSkeptical: return "generalized";
    }
    return "?";
}

bool view_from_string(const std::string& s, View& out) {
    if (s == "credulous")
        out = View::Credulous;
    else if (s == "skeptical")
        out = View::Skeptical;
    else if (s == "generalized")
        out = View::GeneralizedSkeptical;
    else
        return false;
    return true;
}

std::string to_string(AttackKind k) {
    switch (k) {
    case AttackKind::Undercut: return "undercut";
    case AttackKind::Rebut: return "rebut";
    case AttackKind::Thinning: return "thinning";
    }
    return "?";
}

namespace {

std::multiset<Literal> as_set(const std::vector<Literal>& ls) {
    return std::multiset<Literal>(ls.begin(), ls.end());
}

bool same_condition_set(const Rule& a, const Rule& b) {
    return as_set(a.strong_premises) == as_set(b.strong_premises) &&
           as_set(a.weak_premises) == as_set(b.weak_premises);
}

bool head_subset(const Rule& a, const Rule& b) {
    for (const Literal& l : a.head)
        if (std::find(b.head.begin(), b.head.end(), l) == b.head.end())
            return false;
    return true;
}

std::vector<Literal> head_difference(const Rule& a, const Rule& b) {
    std::vector<Literal> out;
    for (const Literal& l : a.head)
        if (std::find(b.head.begin(), b.head.end(), l) == b.head.end())
            out.push_back(l);
    return out;
}

Rule residual_rule(const Rule& base, const Literal& q) {
    Rule aux;
    aux.id = RuleId{base.id.agent, base.id.local + "^" + to_string(q)};
    aux.strong_premises = base.strong_premises;
    aux.weak_premises = base.weak_premises;
    aux.head = {q};
    return aux;
}

} // namespace

bool thins(const Rule& r1, const Rule& r2) {
    if (r1.id.agent == r2.id.agent)
        return false;
    if (!same_condition_set(r1, r2))
        return false;
    return head_subset(r2, r1) && r2.head.size() < r1.head.size();
}

std::vector<Rule> auxiliary_rules(const Rule& r1, const Rule& r2) {
    if (!thins(r1, r2))
        throw std::invalid_argument("auxiliary_rules: r1 does not thin r2");
    std::vector<Rule> out;
    for (const Literal& q : head_difference(r1, r2))
        out.push_back(residual_rule(r1, q));
    return out;
}

std::vector<Rule> generalized_reduction(const Rule& rule_c, const Literal& certain_c,
                                        const Rule& rule_d) {
    if (rule_c.id.agent == rule_d.id.agent || !same_condition_set(rule_c, rule_d))
        throw std::invalid_argument("generalized_reduction: rules are not similar");
    bool intersect = false;
    for (const Literal& l : rule_c.head)
        intersect = intersect ||
                    std::find(rule_d.head.begin(), rule_d.head.end(), l) != rule_d.head.end();
    if (!intersect || head_subset(rule_c, rule_d) || head_subset(rule_d, rule_c))
        throw std::invalid_argument("generalized_reduction: heads must properly intersect");
    if (std::find(rule_c.head.begin(), rule_c.head.end(), certain_c) == rule_c.head.end())
        throw std::invalid_argument("generalized_reduction: certain not in head");

    bool shared =
        std::find(rule_d.head.begin(), rule_d.head.end(), certain_c) != rule_d.head.end();
    if (!shared)
        return {}; // committed disjunct outside the foreign head: conflict dissolves
    std::vector<Rule> out;
    for (const Literal& q : head_difference(rule_d, rule_c))
        out.push_back(residual_rule(rule_d, q));
    return out;
}

AttackAnalysis::AttackAnalysis(const CompiledSystem& sys, const ArgSet& base, View view)
    : sys_(&sys), view_(view) {
    if (base.truncated)
        throw std::runtime_error("attack analysis requires an untruncated argument set");
    args_ = base.args;
    real_count_ = static_cast<int>(args_.size());
    for (int i = 0; i < real_count_; ++i)
        if (args_[i].empty())
            empty_index_ = i;
    if (view_ != View::Credulous)
        synthesize_auxiliaries();
    build_relations();
}

const CompiledRule& AttackAnalysis::rule(int handle) const {
    if (handle < sys_->rule_count())
        return sys_->rule(handle);
    return synth_rules_[handle - sys_->rule_count()];
}

int AttackAnalysis::pool_rule_count() const {
    return sys_->rule_count() + static_cast<int>(synth_rules_.size());
}

int AttackAnalysis::find(const std::vector<ArgumentStep>& key) const {
    for (int i = 0; i < size(); ++i)
        if (args_[i].key == key)
            return i;
    return -1;
}

void AttackAnalysis::synthesize_auxiliaries() {
    const CompiledSystem& sys = *sys_;
    // Condition-set equality on interned literals, order-insensitive.
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<std::vector<int>> strong_sorted, weak_sorted, head_sorted;
    for (int r = 0; r < sys.rule_count(); ++r) {
        strong_sorted.push_back(sorted(sys.rule(r).strong));
        weak_sorted.push_back(sorted(sys.rule(r).weak));
        head_sorted.push_back(sorted(sys.rule(r).head));
    }
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };

    std::map<std::pair<int, int>, int> synth_index; // (foreign rule, residual lit) -> handle
    std::map<std::vector<ArgumentStep>, int> aux_index;
    std::set<std::pair<int, int>> edge_seen;

    for (int t = 0; t < real_count_; ++t) {
        const Argument& target = args_[t];
        for (const ArgumentStep& step : target.steps) {
            int rc = step.rule;
            for (int rf = 0; rf < sys.rule_count(); ++rf) {
                if (sys.rule(rf).agent == sys.rule(rc).agent)
                    continue;
                if (strong_sorted[rf] != strong_sorted[rc] || weak_sorted[rf] != weak_sorted[rc])
                    continue;
                bool residual_exists = !subset(head_sorted[rf], head_sorted[rc]);
                if (!residual_exists)
                    continue;
                if (view_ == View::Skeptical) {
                    if (!subset(head_sorted[rc], head_sorted[rf]))
                        continue; // only strict head subsumption thins here
                } else {
                    bool committed_shared =
                        std::binary_search(head_sorted[rf].begin(), head_sorted[rf].end(),
                                           step.certain);
                    if (!committed_shared)
                        continue; // committed disjunct outside the foreign head
                }
                // Minimal prefix of the target grounding the shared condition
                // set. The thinned rule is a step of the target, so its strong
                // premises are grounded before it; the scan always completes.
                size_t prefix_len = 0;
                {
                    const std::vector<int>& need = strong_sorted[rc];
                    size_t missing = need.size();
                    for (size_t i = 0; i < target.steps.size() && missing > 0; ++i) {
                        if (std::binary_search(need.begin(), need.end(),
                                               target.steps[i].certain))
                            --missing;
                        prefix_len = i + 1;
                    }
                }
                for (int q : sys.rule(rf).head) {
                    if (std::binary_search(head_sorted[rc].begin(), head_sorted[rc].end(), q))
                        continue;
                    auto [it, inserted] = synth_index.try_emplace(
                        {rf, q}, sys.rule_count() + static_cast<int>(synth_rules_.size()));
                    if (inserted) {
                        CompiledRule aux;
                        aux.id = RuleId{sys.rule(rf).id.agent,
                                        sys.rule(rf).id.local + "^" + sys.lit_name(q)};
                        aux.agent = sys.rule(rf).agent;
                        aux.strong = sys.rule(rf).strong;
                        aux.weak = sys.rule(rf).weak;
                        aux.head = {q};
                        aux.alias_of = rf;
                        aux.synthetic = true;
                        synth_rules_.push_back(std::move(aux));
                    }
                    int handle = it->second;

                    Argument aux_arg;
                    aux_arg.steps.assign(target.steps.begin(),
                                         target.steps.begin() + prefix_len);
                    aux_arg.steps.push_back({handle, q});
                    aux_arg.key = aux_arg.steps;
                    std::sort(aux_arg.key.begin(), aux_arg.key.end());
                    auto [ait, fresh] =
                        aux_index.try_emplace(aux_arg.key, static_cast<int>(args_.size()));
                    if (fresh) {
                        aux_arg.conclusions = Bits(sys.lit_count());
                        aux_arg.weak_assumptions = Bits(sys.lit_count());
                        for (const ArgumentStep& st : aux_arg.steps) {
                            aux_arg.conclusions.set(st.certain);
                            for (int w : rule(st.rule).weak)
                                aux_arg.weak_assumptions.set(w);
                        }
                        aux_arg.synthetic = true;
                        args_.push_back(std::move(aux_arg));
                    }
                    Argument& stored = args_[ait->second];
                    if (std::find(stored.thin_targets.begin(), stored.thin_targets.end(), t) ==
                        stored.thin_targets.end())
                        stored.thin_targets.push_back(t);
                    if (edge_seen.insert({ait->second, t}).second)
                        thin_attacks_.push_back(
                            {ait->second, t, handle, q, rc, step.certain});
                }
            }
        }
    }
    for (Argument& a : args_)
        std::sort(a.thin_targets.begin(), a.thin_targets.end());
}

bool AttackAnalysis::rebut_gate(int attacker_rule, int target_rule) const {
    const CompiledRule& ar = rule(attacker_rule);
    const CompiledRule& tr = rule(target_rule);
    int a = ar.alias_of >= 0 ? ar.alias_of : attacker_rule;
    int t = tr.alias_of >= 0 ? tr.alias_of : target_rule;
    if (ar.agent == tr.agent)
        return !sys_->rule_preferred(t, a);
    // A global order between the owning agents settles head-on conflicts
    // outright; rebuts only stand between agents the hierarchy leaves
    // incomparable.
    return !sys_->agents_comparable(ar.agent, tr.agent);
}

bool AttackAnalysis::rebut_pair(int a, int b) const {
    const Argument& x = args_[a];
    const Argument& y = args_[b];
    for (const ArgumentStep& sa : x.steps) {
        int want = CompiledSystem::complement(sa.certain);
        if (!y.conclusions.test(want))
            continue;
        for (const ArgumentStep& sb : y.steps)
            if (sb.certain == want && rebut_gate(sa.rule, sb.rule))
                return true;
    }
    return false;
}

void AttackAnalysis::build_relations() {
    const int n = size();
    std::vector<Bits> comp_conclusions(n);
    std::vector<uint8_t> self_undercut(n, 0);
    for (int i = 0; i < n; ++i) {
        Bits comp(sys_->lit_count());
        for (const ArgumentStep& st : args_[i].steps)
            comp.set(CompiledSystem::complement(st.certain));
        comp_conclusions[i] = std::move(comp);
        self_undercut[i] = args_[i].conclusions.intersects(args_[i].weak_assumptions) ? 1 : 0;
    }

    undercut_.assign(n, Bits(n));
    rebut_.assign(n, Bits(n));
    defeat_.assign(n, Bits(n));
    for (int a = 0; a < n; ++a) {
        const bool is_empty = args_[a].empty();
        for (int b = 0; b < n; ++b) {
            bool u = args_[a].conclusions.intersects(args_[b].weak_assumptions);
            bool r = args_[a].conclusions.intersects(comp_conclusions[b]) && rebut_pair(a, b);
            if (u)
                undercut_[a].set(b);
            if (r)
                rebut_[a].set(b);
            if ((is_empty && self_undercut[b]) || u)
                defeat_[a].set(b);
        }
    }
    for (int a = 0; a < n; ++a) {
        const bool thinner = args_[a].synthetic && view_ != View::Credulous;
        for (int b = 0; b < n; ++b) {
            if (!defeat_[a].test(b) && rebut_[a].test(b) && !undercut_[b].test(a))
                defeat_[a].set(b);
            if (thinner && !defeat_[a].test(b) &&
                std::binary_search(args_[a].thin_targets.begin(), args_[a].thin_targets.end(),
                                   b))
                defeat_[a].set(b);
        }
    }

    attackers_.assign(n, Bits(n));
    strict_targets_.assign(n, Bits(n));
    defeaters_.assign(n, {});
    strict_defeaters_.assign(n, {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (defeat_[a].test(b)) {
                attackers_[b].set(a);
                defeaters_[b].push_back(a);
                if (!defeat_[b].test(a)) {
                    strict_targets_[a].set(b);
                    strict_defeaters_[b].push_back(a);
                }
            }
}

AttackWitness AttackAnalysis::witness(int attacker, int target, AttackKind kind) const {
    const Argument& x = args_[attacker];
    const Argument& y = args_[target];
    if (kind == AttackKind::Undercut) {
        for (const ArgumentStep& sa : x.steps) {
            if (!y.weak_assumptions.test(sa.certain))
                continue;
            for (const ArgumentStep& sb : y.steps) {
                const CompiledRule& rb = rule(sb.rule);
                if (std::find(rb.weak.begin(), rb.weak.end(), sa.certain) != rb.weak.end())
                    return {rule(sa.rule).id, sys_->literal(sa.certain), rb.id,
                            sys_->literal(sa.certain)};
            }
        }
    } else if (kind == AttackKind::Rebut) {
        for (const ArgumentStep& sa : x.steps) {
            int want = CompiledSystem::complement(sa.certain);
            if (!y.conclusions.test(want))
                continue;
            for (const ArgumentStep& sb : y.steps)
                if (sb.certain == want && rebut_gate(sa.rule, sb.rule))
                    return {rule(sa.rule).id, sys_->literal(sa.certain), rule(sb.rule).id,
                            sys_->literal(sb.certain)};
        }
    } else {
        for (const ThinningAttack& t : thin_attacks_)
            if (t.attacker == attacker && t.target == target)
                return {rule(t.rule).id, sys_->literal(t.literal), rule(t.target_rule).id,
                        sys_->literal(t.target_literal)};
    }
    return {};
}

const std::vector<AttackEdge>& AttackAnalysis::edges() const {
    if (edges_built_)
        return edges_;
    edges_built_ = true;
    const int n = size();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (undercut_[a].test(b))
                edges_.push_back({a, b, AttackKind::Undercut,
                                  witness(a, b, AttackKind::Undercut)});
            if (rebut_[a].test(b))
                edges_.push_back({a, b, AttackKind::Rebut, witness(a, b, AttackKind::Rebut)});
        }
    }
    for (const ThinningAttack& t : thin_attacks_)
        edges_.push_back({t.attacker, t.target, AttackKind::Thinning,
                          {rule(t.rule).id, sys_->literal(t.literal), rule(t.target_rule).id,
                           sys_->literal(t.target_literal)}});
    std::stable_sort(edges_.begin(), edges_.end(),
                     [](const AttackEdge& x, const AttackEdge& y) {
                         if (x.attacker != y.attacker)
                             return x.attacker < y.attacker;
                         return x.target < y.target;
                     });
    return edges_;
}

} // namespace argus
