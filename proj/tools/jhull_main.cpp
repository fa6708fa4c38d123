#include <iostream>

#include "jhull/cli.hpp"

int main(int argc, char** argv) { return jhull::cli::run(argc, argv, std::cout, std::cerr); }
