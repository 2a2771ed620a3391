#include "cli.hpp"

int main(int argc, char** argv) { return polyseq::cli::main_entry(argc, argv); }
