#include "argus/cli.hpp"

int main(int argc, char** argv) { return argus::run_cli(argc, argv); }
