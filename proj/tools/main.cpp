#include <iostream>
#include <vector>

#include "qnum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qnum::run(args, std::cout, std::cerr);
}
