#include <iostream>

#include "lamglass/cli.hpp"

int main(int argc, char** argv) { return lamglass::cli::run(argc, argv, std::cout, std::cerr); }
