#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pdw::cli::CommandResult result = pdw::cli::run_command(args);
    std::cout << result.report;
    return result.exit_code;
}
