#include <iostream>

#include "lowlying/cli.hpp"

int main(int argc, char** argv) { return lowlying::cli::run(argc, argv, std::cout, std::cerr); }
