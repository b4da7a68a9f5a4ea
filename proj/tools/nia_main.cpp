#include <iostream>

#include "nia/harness/cli.hpp"

int main(int argc, char** argv) { return nia::harness::run_cli(argc, argv, std::cout, std::cerr); }
