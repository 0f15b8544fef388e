#include <iostream>

#include "smalg/cli.hpp"

int main(int argc, char** argv) { return smalg::cli::run(argc, argv, std::cout, std::cerr); }
