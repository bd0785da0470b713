#include "wdsmooth/cli/commands.hpp"

int main(int argc, char** argv) { return wdsmooth::cli::run_cli(argc, argv); }
