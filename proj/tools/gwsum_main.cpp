#include <iostream>

#include "gwsum/cli.hpp"

int main(int argc, char** argv) { return gwsum::cli::main(argc, argv, std::cout, std::cerr); }
