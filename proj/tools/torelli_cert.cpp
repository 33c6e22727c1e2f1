#include <iostream>

#include "torelli/cli.hpp"

int main(int argc, char** argv) { return torelli::run_cli(argc, argv, std::cout, std::cerr); }
