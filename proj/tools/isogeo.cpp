#include <iostream>

#include "isogeo/cli.hpp"

int main(int argc, char** argv) { return isogeo::cli::run(argc, argv, std::cout, std::cerr); }
