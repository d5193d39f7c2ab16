#include <iostream>

#include "normlab/cli.hpp"

int main(int argc, char** argv) { return normlab::cli::main(argc, argv, std::cout, std::cerr); }
