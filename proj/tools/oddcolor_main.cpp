#include <iostream>

#include "oddcolor/cli.hpp"

int main(int argc, char** argv) { return oddcolor::cli::run(argc, argv, std::cout, std::cerr); }
