#include "naf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return naf::cli::run(argc, argv, std::cout, std::cerr); }
