#include <iostream>

#include "bouillabaisse/cli.hpp"

int main(int argc, char** argv) {
    const auto result = bouillabaisse::cli::run(std::vector<std::string>(argv, argv + argc));
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
