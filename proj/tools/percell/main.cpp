#include "commands.hpp"

int main(int argc, char** argv) { return percell::cli::run_main(argc, argv); }
