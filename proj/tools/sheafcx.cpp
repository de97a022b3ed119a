#include "sheafcx/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sheafcx::run_command(args, std::cout, std::cerr);
}
