#include <iostream>

#include "hered/cli.hpp"

int main(int argc, char** argv) { return hered::cli::run(argc, argv, std::cout, std::cerr); }
