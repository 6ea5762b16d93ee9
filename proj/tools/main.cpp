#include <iostream>
#include <vector>

#include "ietk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ietk::cli::run(args, std::cout, std::cerr);
}
