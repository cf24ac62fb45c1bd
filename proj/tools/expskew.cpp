#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return expskew::cli::run(argc, argv, std::cout, std::cerr); }
