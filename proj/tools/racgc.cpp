#include "racgc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return racgc::run(argc, argv, std::cout, std::cerr); }
