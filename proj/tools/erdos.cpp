#include <iostream>

#include "erdos/cli.hpp"

int main(int argc, char** argv) {
    return erdos::cli::main(argc, argv, std::cout, std::cerr);
}
