#include <iostream>
#include <vector>

#include "tl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tl::run_cli(args, std::cout);
}
