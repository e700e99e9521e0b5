#include <iostream>

#include "hhext/cli.hpp"

int main(int argc, char** argv) { return hhext::cli::run(argc, argv, std::cout, std::cerr); }
