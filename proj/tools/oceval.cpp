#include <iostream>

#include "oceval/cli.hpp"

int main(int argc, char** argv) { return oceval::cli::run(argc, argv, std::cout, std::cerr); }
