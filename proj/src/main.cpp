#include <iostream>

#include "zc/cli.hpp"

int main(int argc, char** argv) { return zc::run_cli(argc, argv, std::cout, std::cerr); }
