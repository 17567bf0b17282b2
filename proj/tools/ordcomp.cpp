#include <iostream>

#include "ordcomp/cli.hpp"

int main(int argc, char** argv) { return ordcomp::run_cli(argc, argv, std::cout, std::cerr); }
