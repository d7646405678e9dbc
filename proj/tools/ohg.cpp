#include <iostream>

#include "ohg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ohg::cli::run(args, std::cout, std::cerr);
}
