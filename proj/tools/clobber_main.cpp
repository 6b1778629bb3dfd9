#include <iostream>
#include <string>
#include <vector>

#include "clobber/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return clobber::run_cli(args, std::cout, std::cerr);
}
