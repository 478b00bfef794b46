#include <iostream>

#include "moorecalc/cli.hpp"

int main(int argc, char** argv) { return moorecalc::cli::run(argc, argv, std::cout, std::cerr); }
