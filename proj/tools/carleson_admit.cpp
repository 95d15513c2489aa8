#include "carleson/cli.hpp"

int main(int argc, char** argv) { return carleson::cli::main_entry(argc, argv); }
