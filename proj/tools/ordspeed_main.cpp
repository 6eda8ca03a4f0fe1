#include <iostream>
#include <string>
#include <vector>

#include "ordspeed/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ordspeed::run_cli(std::move(args), std::cout, std::cerr);
}
