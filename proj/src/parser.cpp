#include "argus/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace argus {

std::string to_string(const Diagnostic& d) {
    std::ostringstream out;
    out << d.document << ":" << d.line << ":" << d.column << ": " << d.message;
    return out.str();
}

namespace {

enum class Tok {
    Ident,
    Colon,
    Comma,
    Tilde,
    Minus,
    Arrow,
    Dot,
    Pipe,
    LBrace,
    RBrace,
    Greater,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& doc, const std::string& text, std::vector<Diagnostic>& diags)
        : doc_(doc), text_(text), diags_(diags) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            int line = line_, col = col_;
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string ident;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    ident.push_back(advance());
                out.push_back({Tok::Ident, std::move(ident), line, col});
                continue;
            }
            switch (c) {
            case ':': advance(); out.push_back({Tok::Colon, ":", line, col}); break;
            case ',': advance(); out.push_back({Tok::Comma, ",", line, col}); break;
            case '~': advance(); out.push_back({Tok::Tilde, "~", line, col}); break;
            case '.': advance(); out.push_back({Tok::Dot, ".", line, col}); break;
            case '|': advance(); out.push_back({Tok::Pipe, "|", line, col}); break;
            case '{': advance(); out.push_back({Tok::LBrace, "{", line, col}); break;
            case '}': advance(); out.push_back({Tok::RBrace, "}", line, col}); break;
            case '>': advance(); out.push_back({Tok::Greater, ">", line, col}); break;
            case '-':
                advance();
                out.push_back({Tok::Minus, "-", line, col});
                break;
            case '=':
                advance();
                if (pos_ < text_.size() && text_[pos_] == '>') {
                    advance();
                    out.push_back({Tok::Arrow, "=>", line, col});
                } else {
                    error(line, col, "expected '=>' after '='");
                    return finish(std::move(out));
                }
                break;
            default:
                error(line, col, std::string("unexpected character '") + c + "'");
                return finish(std::move(out));
            }
        }
    }

private:
    std::vector<Token> finish(std::vector<Token> out) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    void error(int line, int col, std::string msg) {
        diags_.push_back({doc_, line, col, std::move(msg)});
    }

    const std::string& doc_;
    const std::string& text_;
    std::vector<Diagnostic>& diags_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// Declaration sites, kept for validation messages that fire after parsing.
struct PrefDecl {
    std::string left, right;
    int line, col;
};

struct ParsedAgent {
    Agent agent;
    std::vector<PrefDecl> pref_decls;
    int line, col;
};

class Parser {
public:
    Parser(const std::string& doc, std::vector<Token> toks, std::vector<Diagnostic>& diags)
        : doc_(doc), toks_(std::move(toks)), diags_(diags) {}

    void run(std::vector<ParsedAgent>& agents, std::vector<PrefDecl>& global_prefs) {
        while (!at(Tok::End)) {
            if (at_keyword("agent")) {
                parse_agent(agents);
            } else if (at_keyword("prefer")) {
                parse_pref(global_prefs);
            } else {
                error("expected 'agent' or 'prefer'");
                return;
            }
            if (!diags_.empty())
                return;
        }
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_keyword(const char* kw) const { return at(Tok::Ident) && peek().text == kw; }
    const Token& take() { return toks_[pos_++]; }

    bool expect(Tok k, const char* what) {
        if (!at(k)) {
            error(std::string("expected ") + what);
            return false;
        }
        take();
        return true;
    }

    void error(std::string msg) {
        diags_.push_back({doc_, peek().line, peek().col, std::move(msg)});
    }

    void parse_agent(std::vector<ParsedAgent>& agents) {
        take(); // 'agent'
        if (!at(Tok::Ident)) {
            error("expected agent name");
            return;
        }
        Token name = take();
        ParsedAgent pa;
        pa.agent.id = name.text;
        pa.line = name.line;
        pa.col = name.col;
        if (!expect(Tok::LBrace, "'{'"))
            return;
        while (!at(Tok::RBrace)) {
            if (at(Tok::End)) {
                error("unterminated agent block");
                return;
            }
            if (at_keyword("prefer")) {
                parse_pref(pa.pref_decls);
            } else if (at(Tok::Ident)) {
                parse_rule(pa);
            } else {
                error("expected rule or 'prefer'");
                return;
            }
            if (!diags_.empty())
                return;
        }
        take(); // '}'
        agents.push_back(std::move(pa));
    }

    void parse_pref(std::vector<PrefDecl>& out) {
        take(); // 'prefer'
        if (!at(Tok::Ident)) {
            error("expected name after 'prefer'");
            return;
        }
        Token left = take();
        if (!expect(Tok::Greater, "'>'"))
            return;
        if (!at(Tok::Ident)) {
            error("expected name after '>'");
            return;
        }
        Token right = take();
        if (!expect(Tok::Dot, "'.'"))
            return;
        out.push_back({left.text, right.text, left.line, left.col});
    }

    std::optional<Literal> parse_literal() {
        bool neg = false;
        if (at(Tok::Minus)) {
            take();
            neg = true;
        }
        if (!at(Tok::Ident)) {
            error("expected atom name");
            return std::nullopt;
        }
        return Literal{take().text, neg};
    }

    void parse_rule(ParsedAgent& pa) {
        Token name = take();
        if (name.text == "agent") {
            error("'agent' is reserved and cannot name a rule");
            return;
        }
        Rule rule;
        rule.id = RuleId{pa.agent.id, name.text};
        if (!expect(Tok::Colon, "':'"))
            return;
        if (!at(Tok::Arrow)) {
            while (true) {
                bool weak = false;
                if (at(Tok::Tilde)) {
                    take();
                    weak = true;
                }
                auto lit = parse_literal();
                if (!lit)
                    return;
                (weak ? rule.weak_premises : rule.strong_premises).push_back(*lit);
                if (at(Tok::Comma)) {
                    take();
                    continue;
                }
                break;
            }
        }
        if (!expect(Tok::Arrow, "'=>'"))
            return;
        while (true) {
            auto lit = parse_literal();
            if (!lit)
                return;
            rule.head.push_back(*lit);
            if (at(Tok::Pipe)) {
                take();
                continue;
            }
            break;
        }
        if (!expect(Tok::Dot, "'.'"))
            return;
        validate_rule(rule, name);
        if (!diags_.empty())
            return;
        pa.agent.rules.push_back(std::move(rule));
    }

    void validate_rule(const Rule& rule, const Token& at_tok) {
        auto dup = [](const std::vector<Literal>& ls) {
            std::set<Literal> seen;
            for (const Literal& l : ls)
                if (!seen.insert(l).second)
                    return true;
            return false;
        };
        auto fail = [&](std::string msg) {
            diags_.push_back({doc_, at_tok.line, at_tok.col,
                              "rule " + rule.id.local + ": " + std::move(msg)});
        };
        if (dup(rule.head))
            fail("duplicate literal in head");
        if (dup(rule.strong_premises) || dup(rule.weak_premises))
            fail("duplicate premise");
        for (const Literal& l : rule.head) {
            Literal c = argus::complement(l);
            for (const Literal& o : rule.head)
                if (o == c) {
                    fail("head contains a literal and its complement");
                    return;
                }
        }
    }

    const std::string& doc_;
    std::vector<Token> toks_;
    std::vector<Diagnostic>& diags_;
    size_t pos_ = 0;
};

} // namespace

ParseResult parse_system(const std::vector<NamedDocument>& sources) {
    ParseResult result;
    std::vector<ParsedAgent> agents;
    std::vector<std::string> agent_docs;
    std::vector<std::pair<std::string, PrefDecl>> global_prefs; // (doc, decl)

    for (const NamedDocument& doc : sources) {
        Lexer lexer(doc.name, doc.text, result.diagnostics);
        std::vector<Token> toks = lexer.run();
        if (!result.diagnostics.empty())
            return result;
        Parser parser(doc.name, std::move(toks), result.diagnostics);
        std::vector<PrefDecl> doc_prefs;
        size_t before = agents.size();
        parser.run(agents, doc_prefs);
        if (!result.diagnostics.empty())
            return result;
        for (auto& pd : doc_prefs)
            global_prefs.emplace_back(doc.name, std::move(pd));
        for (size_t i = before; i < agents.size(); ++i)
            agent_docs.push_back(doc.name);
    }

    auto fail = [&](const std::string& doc, int line, int col, std::string msg) {
        result.diagnostics.push_back({doc, line, col, std::move(msg)});
    };

    ArgumentationSystem sys;
    std::set<std::string> agent_ids;
    for (size_t i = 0; i < agents.size(); ++i) {
        ParsedAgent& pa = agents[i];
        if (!agent_ids.insert(pa.agent.id).second) {
            fail(agent_docs[i], pa.line, pa.col, "duplicate agent '" + pa.agent.id + "'");
            continue;
        }
        std::set<std::string> rule_names;
        for (const Rule& r : pa.agent.rules)
            if (!rule_names.insert(r.id.local).second)
                fail(agent_docs[i], pa.line, pa.col,
                     "duplicate rule '" + r.id.local + "' in agent '" + pa.agent.id + "'");
        for (const PrefDecl& pd : pa.pref_decls) {
            if (!rule_names.count(pd.left) || !rule_names.count(pd.right)) {
                fail(agent_docs[i], pd.line, pd.col,
                     "preference references unknown rule '" +
                         (rule_names.count(pd.left) ? pd.right : pd.left) + "'");
                continue;
            }
            pa.agent.rule_prefs.add(RuleId{pa.agent.id, pd.left}, RuleId{pa.agent.id, pd.right});
        }
        if (auto cyc = pa.agent.rule_prefs.validate())
            fail(agent_docs[i], pa.line, pa.col,
                 "preference cycle through rule '" + cyc->local + "' in agent '" + pa.agent.id +
                     "'");
        sys.agents.push_back(std::move(pa.agent));
    }
    for (const auto& [doc, pd] : global_prefs) {
        if (!agent_ids.count(pd.left) || !agent_ids.count(pd.right)) {
            fail(doc, pd.line, pd.col,
                 "preference references unknown agent '" +
                     (agent_ids.count(pd.left) ? pd.right : pd.left) + "'");
            continue;
        }
        sys.agent_prefs.add(pd.left, pd.right);
    }
    if (auto cyc = sys.agent_prefs.validate())
        fail(global_prefs.empty() ? "<input>" : global_prefs.front().first, 0, 0,
             "agent preference cycle through '" + *cyc + "'");

    if (result.diagnostics.empty())
        result.system = std::move(sys);
    return result;
}

ParseResult parse_system(const std::string& name, const std::string& text) {
    return parse_system(std::vector<NamedDocument>{{name, text}});
}

} // namespace argus
