#ifndef ARGUS_PARSER_HPP
#define ARGUS_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "argus/system.hpp"

namespace argus {

struct NamedDocument {
    std::string name;
    std::string text;
};

struct Diagnostic {
    std::string document;
    int line = 0;
    int column = 0;
    std::string message;
};

std::string to_string(const Diagnostic& d);

struct ParseResult {
    std::optional<ArgumentationSystem> system;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return system.has_value(); }
};

/// Parses and validates one or more knowledge-base documents into a single
/// system. On any syntax or validation error the result carries diagnostics
/// and no system. Agents may not be re-declared across documents.
ParseResult parse_system(const std::vector<NamedDocument>& sources);

/// Convenience wrapper for a single in-memory document.
ParseResult parse_system(const std::string& name, const std::string& text);

} // namespace argus

#endif
