#include <iostream>

#include "tiltwall/cli.hpp"

int main(int argc, char** argv) { return tiltwall::run_cli(argc, argv, std::cout, std::cerr); }
