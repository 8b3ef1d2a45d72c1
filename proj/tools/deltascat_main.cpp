#include <iostream>
#include <string>
#include <vector>

#include "deltascat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return deltascat::cli::run(args, std::cout, std::cerr);
}
