#include "trispec_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return trispec::cli::run(argc, argv, std::cout, std::cerr);
}
