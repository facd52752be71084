#include <iostream>

#include "mono/cli.hpp"

int main(int argc, char** argv) { return mono::run(argc, argv, std::cout, std::cerr); }
