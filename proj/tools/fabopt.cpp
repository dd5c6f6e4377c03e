#include <iostream>

#include "fabopt/cli.hpp"

int main(int argc, char** argv) { return fabopt::run_cli(argc, argv, std::cout, std::cerr); }
