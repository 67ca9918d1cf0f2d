#include <iostream>

#include "pdslab/cli.hpp"

int main(int argc, char** argv) { return pdslab::run_cli(argc, argv, std::cout, std::cerr); }
