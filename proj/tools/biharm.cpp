#include "biharm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return biharm::run_cli(argc, argv, std::cout, std::cerr); }
