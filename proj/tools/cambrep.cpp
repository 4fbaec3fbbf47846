#include <iostream>

#include "cambrep/cli/commands.hpp"

int main(int argc, char** argv) { return cambrep::cli::run(argc, argv, std::cout, std::cerr); }
