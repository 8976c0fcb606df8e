#include <iostream>

#include "lenscoupled_cli/cli.hpp"

int main(int argc, char** argv) { return lenscoupled::cli::run(argc, argv, std::cout, std::cerr); }
