#ifndef ARGUS_CLI_HPP
#define ARGUS_CLI_HPP

namespace argus {

// Exit codes: 0 success, 2 parse/validation/usage error, 3 bounds exceeded,
// 4 assertion failed, 5 depth limit exceeded.
int run_cli(int argc, const char* const* argv);

} // namespace argus

#endif
