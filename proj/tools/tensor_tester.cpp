#include <iostream>

#include "tensor_tester/cli.hpp"

int main(int argc, char** argv) { return tt::cli::run(argc, argv, std::cout, std::cerr); }
