#include <iostream>

#include "possreason/cli.hpp"

int main(int argc, char** argv) {
    return possreason::cli::main_entry(argc, argv, std::cout, std::cerr);
}
