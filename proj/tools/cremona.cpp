#include <iostream>

#include "cremona/cli.hpp"

int main(int argc, char** argv) { return cremona::cli::run(argc, argv, std::cout, std::cerr); }
