#include "nsat/cli.hpp"

int main(int argc, char** argv) { return nsat::run_cli(argc, argv); }
