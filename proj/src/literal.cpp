#include "argus/literal.hpp"

#include <cctype>

namespace argus {

bool is_identifier(std::string_view text) {
    if (text.empty())
        return false;
    unsigned char first = static_cast<unsigned char>(text.front());
    if (!std::isalpha(first) && first != '_')
        return false;
    for (char c : text) {
        unsigned char uc = static_cast<unsigned char>(c);
        if (!std::isalnum(uc) && uc != '_')
            return false;
    }
    return true;
}

std::string to_string(const Literal& l) {
    return l.negated ? "-" + l.atom : l.atom;
}

} // namespace argus
