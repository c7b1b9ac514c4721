#include "kirchhoff/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return kirchhoff::cli::run_cli(argc, argv, std::cout, std::cerr);
}
