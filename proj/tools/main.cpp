#include <iostream>

#include "chromabound/cli.hpp"

int main(int argc, char** argv) { return chromabound::cli::run(argc, argv, std::cout, std::cerr, std::cin); }
