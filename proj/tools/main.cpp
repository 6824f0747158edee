#include <iostream>
#include <string>
#include <vector>

#include "bundle_arith/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bundle_arith::cli::run(args, std::cout, std::cerr);
}
