#include <iostream>

#include "dic/cli.hpp"

int main(int argc, char** argv) { return dic::cli::dispatch(argc, argv, std::cout, std::cerr); }
