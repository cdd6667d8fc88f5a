#include <iostream>

#include "sumdist_cli.hpp"

int main(int argc, char** argv) { return sumdist::cli::run(argc, argv, std::cout, std::cerr); }
