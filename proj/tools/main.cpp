#include <iostream>

#include "spikegate/cli.hpp"

int main(int argc, char** argv) { return spikegate::cli::run(argc, argv, std::cout, std::cerr); }
