#include "semirank/cli.hpp"

int main(int argc, char** argv) { return semirank::run_cli(argc, argv); }
