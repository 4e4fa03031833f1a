#include <iostream>

#include "robsense/cli.hpp"

int main(int argc, char** argv) { return robsense::run_cli(argc, argv, std::cout, std::cerr); }
