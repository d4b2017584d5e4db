#include "argus/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "argus/parser.hpp"
#include "argus/render.hpp"

namespace argus {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBounds = 3;
constexpr int kExitAssert = 4;
constexpr int kExitDepth = 5;

struct Options {
    std::vector<std::string> files;
    std::string view = "credulous";
    std::string format = "text";
    std::string literal;
    std::string expect; // --assert
    int max_steps = 32;
    long max_args = 100000;
    int depth = 0; // 0: derive from pool size
};

bool load_documents(const std::vector<std::string>& paths, std::vector<NamedDocument>& out) {
    for (const std::string& path : paths) {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            return false;
        }
        std::ostringstream text;
        text << in.rdbuf();
        out.push_back({path, text.str()});
    }
    return true;
}

std::optional<Literal> parse_literal_text(const std::string& text) {
    std::string body = text;
    bool neg = false;
    if (!body.empty() && body[0] == '-') {
        neg = true;
        body = body.substr(1);
    }
    if (!is_identifier(body))
        return std::nullopt;
    return Literal{body, neg};
}

struct Loaded {
    ArgumentationSystem system;
    CompiledSystem compiled;
    ArgSet argset;

    Loaded(ArgumentationSystem s, const EnumerationLimits& limits)
        : system(std::move(s)), compiled(system), argset(enumerate_arguments(compiled, limits)) {}
};

int load(const Options& opt, std::unique_ptr<Loaded>& out) {
    std::vector<NamedDocument> docs;
    if (!load_documents(opt.files, docs))
        return kExitInput;
    ParseResult parsed = parse_system(docs);
    if (!parsed.ok()) {
        for (const Diagnostic& d : parsed.diagnostics)
            std::cerr << to_string(d) << "\n";
        return kExitInput;
    }
    EnumerationLimits limits{opt.max_steps, opt.max_args};
    out = std::make_unique<Loaded>(std::move(*parsed.system), limits);
    if (out->argset.truncated) {
        std::cerr << "error: enumeration bounds exceeded (max " << opt.max_args
                  << " arguments, " << opt.max_steps << " steps)\n";
        return kExitBounds;
    }
    return kExitOk;
}

int check_assert(const std::string& expect, const std::string& actual) {
    if (expect.empty() || expect == actual)
        return kExitOk;
    std::cerr << "assertion failed: expected " << expect << ", got " << actual << "\n";
    return kExitAssert;
}

int require_format(const Options& opt, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (opt.format == f)
            return kExitOk;
    std::cerr << "error: format '" << opt.format << "' is not valid for this command\n";
    return kExitInput;
}

int cmd_check(const Options& opt) {
    std::unique_ptr<Loaded> loaded;
    if (int rc = load(opt, loaded))
        return rc;
    size_t rules = 0;
    for (const Agent& a : loaded->system.agents)
        rules += a.rules.size();
    std::cout << "ok: " << loaded->system.agents.size() << " agents, " << rules << " rules, "
              << loaded->argset.args.size() << " arguments\n";
    return kExitOk;
}

int cmd_arguments(const Options& opt) {
    if (int rc = require_format(opt, {"text", "json"}))
        return rc;
    std::unique_ptr<Loaded> loaded;
    if (int rc = load(opt, loaded))
        return rc;
    AttackAnalysis analysis(loaded->compiled, loaded->argset, View::Credulous);
    std::cout << (opt.format == "json" ? render_arguments_json(analysis, false)
                                       : render_arguments_text(analysis, false));
    return kExitOk;
}

int with_view(const Options& opt, View& view) {
    if (!view_from_string(opt.view, view)) {
        std::cerr << "error: unknown view '" << opt.view << "'\n";
        return kExitInput;
    }
    return kExitOk;
}

int cmd_attacks(const Options& opt) {
    if (int rc = require_format(opt, {"text", "json"}))
        return rc;
    std::unique_ptr<Loaded> loaded;
    View view;
    if (int rc = with_view(opt, view))
        return rc;
    if (int rc = load(opt, loaded))
        return rc;
    AttackAnalysis analysis(loaded->compiled, loaded->argset, view);
    if (opt.format == "json")
        render_attacks_json(std::cout, analysis);
    else
        render_attacks_text(std::cout, analysis);
    return kExitOk;
}

int cmd_status(const Options& opt) {
    if (int rc = require_format(opt, {"text", "json"}))
        return rc;
    std::unique_ptr<Loaded> loaded;
    View view;
    if (int rc = with_view(opt, view))
        return rc;
    if (int rc = load(opt, loaded))
        return rc;
    AttackAnalysis analysis(loaded->compiled, loaded->argset, view);
    StatusReport report = classify(analysis);
    if (!opt.literal.empty()) {
        auto lit = parse_literal_text(opt.literal);
        if (!lit) {
            std::cerr << "error: bad literal '" << opt.literal << "'\n";
            return kExitInput;
        }
        LitStatus status = literal_status(analysis, report, *lit);
        std::cout << to_string(*lit) << ": " << to_string(status) << "\n";
        return check_assert(opt.expect, to_string(status));
    }
    std::cout << (opt.format == "json" ? render_status_json(analysis, report)
                                       : render_status_text(analysis, report));
    return kExitOk;
}

int cmd_prove(const Options& opt) {
    if (int rc = require_format(opt, {"text", "json"}))
        return rc;
    std::unique_ptr<Loaded> loaded;
    View view;
    if (int rc = with_view(opt, view))
        return rc;
    auto lit = parse_literal_text(opt.literal);
    if (!lit) {
        std::cerr << "error: prove requires --literal\n";
        return kExitInput;
    }
    if (int rc = load(opt, loaded))
        return rc;
    AttackAnalysis analysis(loaded->compiled, loaded->argset, view);
    int depth = opt.depth > 0 ? opt.depth : default_depth_limit(analysis);

    int l = loaded->compiled.lit_of(*lit);
    std::vector<int> candidates;
    if (l >= 0)
        for (int i = 0; i < analysis.real_count(); ++i)
            if (analysis.arguments()[i].conclusions.test(l))
                candidates.push_back(i);

    // First winning concluding argument carries the proof; with no winner the
    // first candidate's failed tree is shown.
    bool depth_hit = false;
    std::optional<ProofTree> shown;
    int shown_arg = -1;
    for (int c : candidates) {
        ProofTree tree = prove(analysis, c, depth);
        if (tree.outcome == ProofOutcome::DepthExceeded)
            depth_hit = true;
        if (!shown) {
            shown = tree;
            shown_arg = c;
        }
        if (tree.outcome == ProofOutcome::ProponentWins) {
            shown = std::move(tree);
            shown_arg = c;
            break;
        }
    }

    std::string verdict;
    if (candidates.empty()) {
        verdict = "unknown";
        std::cout << "no argument concludes " << to_string(*lit) << "\n";
    } else {
        if (opt.format == "json")
            std::cout << render_tree_json(analysis, *shown);
        else
            std::cout << render_tree_text(analysis, *shown);
        if (shown->outcome == ProofOutcome::ProponentWins) {
            verdict = "justified";
        } else if (depth_hit) {
            std::cerr << "error: depth limit " << depth << " exceeded\n";
            return kExitDepth;
        } else {
            // No concluding argument wins its tree; classify the shown one.
            ProvableStatus s = provable_status(analysis, shown_arg, depth);
            verdict = to_string(s);
        }
        std::cout << to_string(*lit) << ": provably " << verdict << "\n";
    }
    return check_assert(opt.expect, verdict);
}

int cmd_graph(const Options& opt) {
    if (int rc = require_format(opt, {"dot"}))
        return rc;
    std::unique_ptr<Loaded> loaded;
    View view;
    if (int rc = with_view(opt, view))
        return rc;
    if (int rc = load(opt, loaded))
        return rc;
    AttackAnalysis analysis(loaded->compiled, loaded->argset, view);
    render_dot(std::cout, analysis);
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"argus: defeasible argumentation over multi-agent knowledge bases"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_view_flags) {
        cmd->add_option("files", opt.files, "knowledge base files (.akb)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--max-args", opt.max_args, "argument count bound");
        cmd->add_option("--max-steps", opt.max_steps, "steps-per-argument bound");
        if (with_view_flags)
            cmd->add_option("--view", opt.view, "credulous|skeptical|generalized");
    };

    CLI::App* check = app.add_subcommand("check", "parse and validate");
    add_common(check, false);

    CLI::App* arguments = app.add_subcommand("arguments", "list all arguments");
    add_common(arguments, false);
    arguments->add_option("--format", opt.format, "text|json");

    CLI::App* attacks = app.add_subcommand("attacks", "list attack edges");
    add_common(attacks, true);
    attacks->add_option("--format", opt.format, "text|json");

    CLI::App* status = app.add_subcommand("status", "argument and literal statuses");
    add_common(status, true);
    status->add_option("--format", opt.format, "text|json");
    status->add_option("--literal", opt.literal, "restrict to one literal");
    status->add_option("--assert", opt.expect, "expected status; mismatch exits 4");

    CLI::App* prove = app.add_subcommand("prove", "dialectical proof for a literal");
    add_common(prove, true);
    prove->add_option("--format", opt.format, "text|json");
    prove->add_option("--literal", opt.literal, "literal to prove")->required();
    prove->add_option("--depth", opt.depth, "proof depth limit");
    prove->add_option("--assert", opt.expect, "expected provable status; mismatch exits 4");

    CLI::App* graph = app.add_subcommand("graph", "attack graph as DOT");
    add_common(graph, true);
    graph->add_option("--format", opt.format, "dot");
    graph->parse_complete_callback([&] {
        if (graph->count("--format") == 0)
            opt.format = "dot";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n" << app.help();
        return kExitInput;
    }

    try {
        if (check->parsed())
            return cmd_check(opt);
        if (arguments->parsed())
            return cmd_arguments(opt);
        if (attacks->parsed())
            return cmd_attacks(opt);
        if (status->parsed())
            return cmd_status(opt);
        if (prove->parsed())
            return cmd_prove(opt);
        if (graph->parsed())
            return cmd_graph(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

} // namespace argus
