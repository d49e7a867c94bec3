#include <iostream>

#include "odflow/shell/cli.hpp"

int main(int argc, char** argv) { return odflow::shell::run_cli(argc, argv, std::cout, std::cerr); }
