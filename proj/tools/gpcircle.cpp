#include <iostream>
#include <string>
#include <vector>

#include "gpc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = gpc::cli::run(args);
    std::cout << result.payload;
    std::cerr << result.diagnostics;
    return result.exit_code;
}
