#ifndef ARGUS_LITERAL_HPP
#define ARGUS_LITERAL_HPP

#include <compare>
#include <string>
#include <string_view>

namespace argus {

/// A propositional literal: an atom or its strong (classical) negation.
struct Literal {
    std::string atom;
    bool negated = false;

    auto operator<=>(const Literal&) const = default;
};

/// Flips the strong-negation flag. Involutive.
inline Literal complement(const Literal& l) { return Literal{l.atom, !l.negated}; }

/// Identifier syntax accepted for atoms, rule names and agent names.
bool is_identifier(std::string_view text);

/// Concrete-syntax form: strong negation rendered as a leading '-'.
std::string to_string(const Literal& l);

} // namespace argus

#endif
