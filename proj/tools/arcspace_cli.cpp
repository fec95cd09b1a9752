#include "arcspace/cli.hpp"

int main(int argc, char** argv) { return arcspace::run_cli(argc, argv); }
