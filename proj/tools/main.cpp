#include <iostream>
#include <string>
#include <vector>

#include "symbidisc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return symbidisc::cli::run(args, std::cout, std::cerr);
}
