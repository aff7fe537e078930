#include <iostream>

#include "symlval/cli.hpp"

int main(int argc, char** argv) { return symlval::cli::run(argc, argv, std::cout, std::cerr); }
