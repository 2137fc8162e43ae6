#include <iostream>

#include "nilseries/cli.hpp"

int main(int argc, char** argv) { return nilseries::cli::run(argc, argv, std::cout, std::cerr); }
