#include <iostream>

#include "cvinv/cli.hpp"

int main(int argc, char** argv) { return cvinv::cli::run(argc, argv, std::cout, std::cerr); }
