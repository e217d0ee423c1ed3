#include <iostream>

#include "frames/cli.hpp"

int main(int argc, char** argv) { return frames::cli::main_entry(argc, argv, std::cout, std::cerr); }
