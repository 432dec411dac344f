#include <iostream>

#include "simstego/cli.hpp"

int main(int argc, char** argv) { return simstego::dispatch(argc, argv, std::cout, std::cerr); }
