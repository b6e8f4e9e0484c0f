#include <iostream>

#include "shape/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return shape::run_cli(args, std::cout, std::cerr);
}
