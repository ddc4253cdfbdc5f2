#include <iostream>
#include <string>
#include <vector>

#include "younglab/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return younglab::cli::run(args, std::cout, std::cerr);
}
