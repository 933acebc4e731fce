#include <iostream>

#include "dirfdr/cli.hpp"

int main(int argc, char** argv) { return dirfdr::cli::run_cli(argc, argv, std::cout, std::cerr); }
