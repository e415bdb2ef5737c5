#include "qlc/cli/run.hpp"

int main(int argc, char** argv) { return qlc::cli::main_entry(argc, argv); }
