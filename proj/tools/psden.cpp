#include <iostream>

#include "psden/cli.hpp"

int main(int argc, char** argv) { return psden::cli::run(argc, argv, std::cout, std::cerr); }
