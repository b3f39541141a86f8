#include <aniso_cli/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return aniso::cli::main_entry(argc, argv, std::cout, std::cerr); }
