#include <iostream>

#include "multirank/cli.hpp"

int main(int argc, char** argv) {
    return multirank::cli::main(argc, argv, std::cout, std::cerr);
}
