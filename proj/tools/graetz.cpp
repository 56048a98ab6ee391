#include <iostream>

#include "graetz/cli.hpp"

int main(int argc, char** argv) { return graetz::cli::run(argc, argv, std::cout, std::cerr); }
