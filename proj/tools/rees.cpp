#include <iostream>

#include "rees/cli.hpp"

int main(int argc, char** argv) { return rees::cli::run(argc, argv, std::cout, std::cerr); }
