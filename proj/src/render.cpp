#include "argus/render.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace argus {

using json = nlohmann::ordered_json;

std::string argument_name(int index) { return "A" + std::to_string(index); }

namespace {

std::string steps_text(const AttackAnalysis& analysis, const Argument& arg) {
    const CompiledSystem& sys = analysis.system();
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const ArgumentStep& st : arg.steps) {
        if (!first)
            out << ", ";
        first = false;
        out << to_string(analysis.rule(st.rule).id) << "=" << sys.lit_name(st.certain);
    }
    out << "]";
    return out.str();
}

std::string conclusions_text(const AttackAnalysis& analysis, const Argument& arg) {
    const CompiledSystem& sys = analysis.system();
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const ArgumentStep& st : arg.steps) {
        if (!first)
            out << ", ";
        first = false;
        out << sys.lit_name(st.certain);
    }
    out << "}";
    return out.str();
}

json argument_json(const AttackAnalysis& analysis, int index) {
    const CompiledSystem& sys = analysis.system();
    const Argument& arg = analysis.arguments()[index];
    json steps = json::array();
    for (const ArgumentStep& st : arg.steps) {
        const CompiledRule& r = analysis.rule(st.rule);
        steps.push_back({{"agent", r.id.agent},
                         {"rule", r.id.local},
                         {"certain", sys.lit_name(st.certain)}});
    }
    json conclusions = json::array();
    for (const ArgumentStep& st : arg.steps)
        conclusions.push_back(sys.lit_name(st.certain));
    return json{{"id", argument_name(index)},
                {"steps", std::move(steps)},
                {"conclusions", std::move(conclusions)},
                {"synthetic", arg.synthetic}};
}

json witness_json(const AttackWitness& w) {
    return json{{"attacker_rule", to_string(w.attacker_rule)},
                {"attacker_literal", to_string(w.attacker_literal)},
                {"target_rule", to_string(w.target_rule)},
                {"target_literal", to_string(w.target_literal)}};
}

// The attack an opponent or proponent move makes on its parent node.
std::string move_kind(const AttackAnalysis& analysis, int mover, int parent) {
    if (analysis.undercuts(mover, parent))
        return "undercut";
    if (analysis.rebuts(mover, parent))
        return "rebut";
    const Argument& m = analysis.arguments()[mover];
    if (m.synthetic)
        return "thinning";
    if (m.empty())
        return "self-undercut";
    return "attack";
}

} // namespace

std::string describe_argument(const AttackAnalysis& analysis, int index) {
    const Argument& arg = analysis.arguments()[index];
    std::ostringstream out;
    out << argument_name(index) << (arg.synthetic ? "* " : " ") << steps_text(analysis, arg)
        << " |- " << conclusions_text(analysis, arg);
    return out.str();
}

std::string render_arguments_text(const AttackAnalysis& analysis, bool include_synthetic) {
    std::ostringstream out;
    for (int i = 0; i < analysis.size(); ++i) {
        if (!include_synthetic && analysis.arguments()[i].synthetic)
            continue;
        out << describe_argument(analysis, i) << "\n";
    }
    return out.str();
}

std::string render_arguments_json(const AttackAnalysis& analysis, bool include_synthetic) {
    json out = json::array();
    for (int i = 0; i < analysis.size(); ++i) {
        if (!include_synthetic && analysis.arguments()[i].synthetic)
            continue;
        out.push_back(argument_json(analysis, i));
    }
    return out.dump(2) + "\n";
}

namespace {

// Walks the relation matrices directly; materializing millions of edge
// structs costs far more than the walk itself.
class EdgeWalker {
public:
    explicit EdgeWalker(const AttackAnalysis& analysis) : an_(analysis) {
        const CompiledSystem& sys = an_.system();
        names_.reserve(an_.size());
        for (int i = 0; i < an_.size(); ++i)
            names_.push_back(argument_name(i));
        rules_.reserve(an_.pool_rule_count());
        for (int h = 0; h < an_.pool_rule_count(); ++h)
            rules_.push_back(to_string(an_.rule(h).id));
        lits_.reserve(sys.lit_count());
        for (int l = 0; l < sys.lit_count(); ++l)
            lits_.push_back(sys.lit_name(l));
        for (size_t i = 0; i < an_.thinning_attacks().size(); ++i) {
            const auto& t = an_.thinning_attacks()[i];
            thin_index_.emplace(std::make_pair(t.attacker, t.target), i);
        }
    }

    // f(attacker, target, kind, arule, alit, trule, tlit); display indices.
    template <typename F>
    void walk(F f) const {
        for (int a = 0; a < an_.size(); ++a) {
            const Argument& x = an_.arguments()[a];
            for (int b = 0; b < an_.size(); ++b) {
                const Argument& y = an_.arguments()[b];
                if (an_.undercuts(a, b)) {
                    for (const ArgumentStep& sa : x.steps) {
                        if (!y.weak_assumptions.test(sa.certain))
                            continue;
                        for (const ArgumentStep& sb : y.steps) {
                            const CompiledRule& rb = an_.rule(sb.rule);
                            if (std::find(rb.weak.begin(), rb.weak.end(), sa.certain) !=
                                rb.weak.end()) {
                                f(a, b, AttackKind::Undercut, sa.rule, sa.certain, sb.rule,
                                  sa.certain);
                                goto undercut_done;
                            }
                        }
                    }
                undercut_done:;
                }
                if (an_.rebuts(a, b)) {
                    for (const ArgumentStep& sa : x.steps) {
                        int want = CompiledSystem::complement(sa.certain);
                        if (!y.conclusions.test(want))
                            continue;
                        for (const ArgumentStep& sb : y.steps)
                            if (sb.certain == want && an_.rebut_allowed(sa.rule, sb.rule)) {
                                f(a, b, AttackKind::Rebut, sa.rule, sa.certain, sb.rule,
                                  sb.certain);
                                goto rebut_done;
                            }
                    }
                rebut_done:;
                }
                if (x.synthetic) {
                    auto it = thin_index_.find({a, b});
                    if (it != thin_index_.end()) {
                        const auto& t = an_.thinning_attacks()[it->second];
                        f(a, b, AttackKind::Thinning, t.rule, t.literal, t.target_rule,
                          t.target_literal);
                    }
                }
            }
        }
    }

    const std::string& name(int i) const { return names_[i]; }
    const std::string& rule(int h) const { return rules_[h]; }
    const std::string& lit(int l) const { return lits_[l]; }

private:
    const AttackAnalysis& an_;
    std::vector<std::string> names_;
    std::vector<std::string> rules_;
    std::vector<std::string> lits_;
    std::map<std::pair<int, int>, size_t> thin_index_;
};

class BufferedOut {
public:
    explicit BufferedOut(std::ostream& out) : out_(out) { buf_.reserve(1 << 17); }
    ~BufferedOut() { flush(); }

    BufferedOut& operator<<(std::string_view s) {
        buf_.append(s);
        if (buf_.size() > (1 << 16))
            flush();
        return *this;
    }

    void flush() {
        out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        buf_.clear();
    }

private:
    std::ostream& out_;
    std::string buf_;
};

} // namespace

void render_attacks_text(std::ostream& out, const AttackAnalysis& analysis) {
    EdgeWalker walker(analysis);
    BufferedOut sink(out);
    walker.walk([&](int a, int b, AttackKind kind, int ar, int al, int tr, int tl) {
        sink << walker.name(a) << " -> " << walker.name(b) << " " << to_string(kind) << " ("
             << walker.rule(ar) << "=" << walker.lit(al) << " vs " << walker.rule(tr) << "="
             << walker.lit(tl) << ")\n";
    });
}

std::string render_attacks_text(const AttackAnalysis& analysis) {
    std::ostringstream out;
    render_attacks_text(out, analysis);
    return out.str();
}

void render_attacks_json(std::ostream& out, const AttackAnalysis& analysis) {
    EdgeWalker walker(analysis);
    BufferedOut sink(out);
    sink << "[";
    bool first = true;
    walker.walk([&](int a, int b, AttackKind kind, int ar, int al, int tr, int tl) {
        sink << (first ? "\n" : ",\n");
        first = false;
        sink << "  {\"attacker\":\"" << walker.name(a) << "\",\"target\":\"" << walker.name(b)
             << "\",\"kind\":\"" << to_string(kind) << "\",\"witness\":{\"attacker_rule\":\""
             << walker.rule(ar) << "\",\"attacker_literal\":\"" << walker.lit(al)
             << "\",\"target_rule\":\"" << walker.rule(tr) << "\",\"target_literal\":\""
             << walker.lit(tl) << "\"}}";
    });
    sink << "\n]\n";
}

std::string render_status_text(const AttackAnalysis& analysis, const StatusReport& report) {
    std::ostringstream out;
    for (int i = 0; i < analysis.size(); ++i)
        out << argument_name(i) << (analysis.arguments()[i].synthetic ? "*" : "") << "\t"
            << steps_text(analysis, analysis.arguments()[i]) << "\t"
            << conclusions_text(analysis, analysis.arguments()[i]) << "\t"
            << to_string(report.per_argument[i]) << "\n";
    out << "\n";
    for (const auto& [lit, status] : report.per_literal)
        out << to_string(lit) << ": " << to_string(status) << "\n";
    return out.str();
}

std::string render_status_json(const AttackAnalysis& analysis, const StatusReport& report) {
    json stages = json::array();
    for (const auto& stage : report.stages) {
        json names = json::array();
        for (int i : stage)
            names.push_back(argument_name(i));
        stages.push_back(std::move(names));
    }
    json arguments = json::array();
    for (int i = 0; i < analysis.size(); ++i) {
        json a = argument_json(analysis, i);
        a["status"] = to_string(report.per_argument[i]);
        arguments.push_back(std::move(a));
    }
    json literals = json::array();
    for (const auto& [lit, status] : report.per_literal)
        literals.push_back({{"literal", to_string(lit)}, {"status", to_string(status)}});
    return json{{"view", to_string(report.view)},
                {"iterations", report.iterations},
                {"trace", std::move(stages)},
                {"arguments", std::move(arguments)},
                {"literals", std::move(literals)}}
               .dump(2) +
           "\n";
}

namespace {

void tree_text(const AttackAnalysis& analysis, const ProofNode& node, int parent, int indent,
               std::ostringstream& out) {
    out << std::string(static_cast<size_t>(indent) * 2, ' ')
        << (node.proponent ? "P: " : "O: ") << describe_argument(analysis, node.argument);
    if (parent >= 0)
        out << "  (" << move_kind(analysis, node.argument, parent) << ")";
    out << "\n";
    for (const ProofNode& child : node.children)
        tree_text(analysis, child, node.argument, indent + 1, out);
}

json tree_json(const AttackAnalysis& analysis, const ProofNode& node, int parent, int& next_id) {
    json out;
    out["id"] = next_id++;
    out["player"] = node.proponent ? "proponent" : "opponent";
    out["argument"] = argument_name(node.argument);
    if (parent >= 0)
        out["kind"] = move_kind(analysis, node.argument, parent);
    json children = json::array();
    for (const ProofNode& child : node.children)
        children.push_back(tree_json(analysis, child, node.argument, next_id));
    out["children"] = std::move(children);
    return out;
}

} // namespace

std::string render_tree_text(const AttackAnalysis& analysis, const ProofTree& tree) {
    std::ostringstream out;
    tree_text(analysis, tree.root, -1, 0, out);
    out << "outcome: " << to_string(tree.outcome) << "\n";
    return out.str();
}

std::string render_tree_json(const AttackAnalysis& analysis, const ProofTree& tree) {
    int next_id = 0;
    json out;
    out["outcome"] = to_string(tree.outcome);
    out["tree"] = tree_json(analysis, tree.root, -1, next_id);
    return out.dump(2) + "\n";
}

void render_dot(std::ostream& out, const AttackAnalysis& analysis) {
    out << "digraph attacks {\n";
    for (int i = 0; i < analysis.size(); ++i) {
        const Argument& arg = analysis.arguments()[i];
        out << "  " << argument_name(i) << " [label=\"" << argument_name(i) << "\\n"
            << conclusions_text(analysis, arg) << "\"";
        if (arg.synthetic)
            out << " shape=box style=dashed";
        out << "];\n";
    }
    BufferedOut sink(out);
    std::vector<std::string> names;
    names.reserve(analysis.size());
    for (int i = 0; i < analysis.size(); ++i)
        names.push_back(argument_name(i));
    for (int a = 0; a < analysis.size(); ++a) {
        const Argument& x = analysis.arguments()[a];
        for (int b = 0; b < analysis.size(); ++b) {
            if (analysis.undercuts(a, b))
                sink << "  " << names[a] << " -> " << names[b] << " [label=\"undercut\"];\n";
            if (analysis.rebuts(a, b))
                sink << "  " << names[a] << " -> " << names[b] << " [label=\"rebut\"];\n";
            if (x.synthetic &&
                std::binary_search(x.thin_targets.begin(), x.thin_targets.end(), b))
                sink << "  " << names[a] << " -> " << names[b] << " [label=\"thinning\"];\n";
        }
    }
    sink.flush();
    out << "}\n";
}

std::string render_dot(const AttackAnalysis& analysis) {
    std::ostringstream out;
    render_dot(out, analysis);
    return out.str();
}

} // namespace argus
