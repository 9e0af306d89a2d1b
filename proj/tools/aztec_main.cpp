#include <iostream>
#include <string>
#include <vector>

#include "aztec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return aztec::cli_run(args, std::cout, std::cerr);
}
