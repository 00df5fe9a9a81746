#include <iostream>

#include "lpfbinom/cli.hpp"

int main(int argc, char** argv) { return lpf::cli::run(argc, argv, std::cout, std::cerr); }
