#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    using namespace comono::cli;
    RunConfig config;
    try {
        config = parse_args(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const UsageError& e) {
        (e.exit_code() == kSuccess ? std::cout : std::cerr) << e.what() << '\n';
        return e.exit_code();
    }
    return run(config, std::cout, std::cerr);
}
