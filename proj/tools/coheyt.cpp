#include <iostream>
#include <vector>

#include "coheyt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return coheyt::run_cli(args, std::cout, std::cerr);
}
