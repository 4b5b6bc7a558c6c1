#include <iostream>

#include "cqsym/cli.hpp"

int main(int argc, char** argv) { return cqsym::run_cli(argc, argv, std::cout, std::cerr); }
