#include <iostream>
#include <vector>

#include "vexil/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vexil::cli::run(args, std::cout, std::cerr);
}
