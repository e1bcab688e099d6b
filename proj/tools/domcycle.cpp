#include <iostream>

#include "domcycle/cli.hpp"

int main(int argc, char** argv) { return domcycle::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
