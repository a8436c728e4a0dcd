#include <iostream>

#include "prelie2/cli.hpp"

int main(int argc, char** argv) { return prelie2::run_cli(argc, argv, std::cout, std::cerr); }
