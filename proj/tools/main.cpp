#include "a1deg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return a1deg::cli::run(args, std::cout, std::cerr, std::cin);
}
