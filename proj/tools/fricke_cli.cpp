#include <iostream>

#include "fricke/cli.hpp"

int main(int argc, char** argv) { return fricke::cli::run(argc, argv, std::cout, std::cerr); }
