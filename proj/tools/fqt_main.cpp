// Thin executable wrapper around the library CLI.
#include <iostream>

#include "fqt/cli.hpp"

int main(int argc, char** argv) { return fqt::cli_main(argc, argv, std::cout, std::cerr); }
