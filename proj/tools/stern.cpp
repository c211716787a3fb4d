#include <iostream>

#include "stern/cli.hpp"

int main(int argc, char** argv) { return stern::run_cli(argc, argv, std::cout, std::cerr); }
