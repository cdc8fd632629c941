#include <iostream>
#include <vector>

#include "statesum/report.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return statesum::run_cli(args, std::cout, std::cerr);
}
