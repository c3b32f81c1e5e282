#include <iostream>

#include "permstego/cli.hpp"

int main(int argc, char** argv) { return permstego::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
