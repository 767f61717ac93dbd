#include <iostream>

#include "eckardt/cli/commands.hpp"

int main(int argc, char** argv) { return eckardt::cli::run(argc, argv, std::cout, std::cerr); }
