#include <iostream>
#include <vector>

#include "superalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return superalg::cli::run_cli(std::move(args), std::cout, std::cerr);
}
