#include <iostream>
#include <string>
#include <vector>

#include "cjt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cjt::execute(args, std::cout, std::cerr);
}
