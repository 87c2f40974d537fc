#include <iostream>

#include "cevia/cli.hpp"

int main(int argc, char** argv) { return cevia::run_cli(argc, argv, std::cout, std::cerr); }
