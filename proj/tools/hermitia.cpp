#include <iostream>

#include "hermitia/cli.hpp"

int main(int argc, char** argv) {
    return hermitia::cli_main(argc, argv, std::cout, std::cerr);
}
