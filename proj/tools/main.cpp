#include <iostream>

#include "runbits/cli.hpp"

int main(int argc, char** argv) { return runbits::run_cli(argc, argv, std::cout, std::cerr); }
