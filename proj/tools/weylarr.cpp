#include "cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return weylarr::cli::run(argc, argv, std::cout, std::cerr); }
