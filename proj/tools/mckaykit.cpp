#include "mckaykit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mckaykit::cli::run(argc, argv, std::cout, std::cerr); }
