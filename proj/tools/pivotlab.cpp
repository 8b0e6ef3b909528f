#include <iostream>

#include "pivotlab/cli.hpp"

int main(int argc, char** argv) { return pivotlab::run_cli(argc, argv, std::cout, std::cerr); }
