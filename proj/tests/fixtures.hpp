#ifndef ARGUS_TESTS_FIXTURES_HPP
#define ARGUS_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "argus/parser.hpp"

namespace argus::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(ARGUS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline ArgumentationSystem load_fixture(const std::string& name) {
    ParseResult r = parse_system(name, read_file(fixture_path(name)));
    if (!r.ok()) {
        std::string msg = "fixture " + name + " failed to parse:";
        for (const Diagnostic& d : r.diagnostics)
            msg += "\n  " + to_string(d);
        throw std::runtime_error(msg);
    }
    return std::move(*r.system);
}

} // namespace argus::testing

#endif
