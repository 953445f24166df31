#include <iostream>

#include "chevorbit/cli.hpp"

int main(int argc, char** argv) { return chevorbit::run_cli(argc, argv, std::cout, std::cerr); }
