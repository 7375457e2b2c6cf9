#include <iostream>
#include <string>
#include <vector>

#include "shknot/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return shknot::run_cli(args, std::cout, std::cerr);
}
