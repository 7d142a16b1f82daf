#include <iostream>

#include "gabor/cli/commands.hpp"

int main(int argc, char** argv) { return gabor::cli::run(argc, argv, std::cout, std::cerr); }
