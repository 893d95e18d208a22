#include "chevrep/cli.hpp"

int main(int argc, char** argv) { return chevrep::cli::run_cli(argc, argv); }
