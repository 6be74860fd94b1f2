#include <iostream>

#include "pb/cli.hpp"

int main(int argc, char** argv) { return pb::run_cli(argc, argv, std::cout, std::cerr); }
