#include <iostream>
#include <string>
#include <vector>

#include "fluxbcs/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fluxbcs::cli::run(args, std::cout, std::cerr);
}
