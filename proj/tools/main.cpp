#include <iostream>

#include "wgcoe/cli.hpp"

int main(int argc, char** argv) { return wgcoe::cli::run(argc, argv, std::cout, std::cerr); }
