#include <iostream>

#include "brc_cli.hpp"

int main(int argc, char** argv) { return brc::cli::run(argc, argv, std::cout, std::cerr); }
