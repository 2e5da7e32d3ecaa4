#include <iostream>

#include "hyparr_cli/cli.hpp"

int main(int argc, char** argv) { return hyparr::cli::main_entry(argc, argv, std::cout, std::cerr); }
