#include <iostream>

#include "fga/cli.hpp"

int main(int argc, char** argv) { return fga::cli::run(argc, argv, std::cout, std::cerr); }
