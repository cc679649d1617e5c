#include <iostream>

#include "hrcv/cli/app.hpp"

int main(int argc, char** argv) { return hrcv::cli::run(argc, argv, std::cout, std::cerr); }
