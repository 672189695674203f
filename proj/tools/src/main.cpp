#include <iostream>

#include "cantordim_cli/cli.hpp"

int main(int argc, char** argv) { return cantordim::cli::run(argc, argv, std::cout, std::cerr); }
