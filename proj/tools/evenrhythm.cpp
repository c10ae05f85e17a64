#include <iostream>

#include "evenrhythm/cli/app.hpp"

int main(int argc, char** argv) { return evenrhythm::cli::run_cli(argc, argv, std::cout, std::cerr); }
