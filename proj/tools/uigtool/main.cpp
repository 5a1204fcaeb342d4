#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return uigtool::run(argc, argv, std::cout, std::cerr); }
