#include <iostream>

#include "cavcoll/cli.hpp"

int main(int argc, char** argv) { return cavcoll::run_cli(argc, argv, std::cout, std::cerr); }
