#include "haulsim/cli.hpp"

int main(int argc, char** argv) { return haulsim::run_cli(argc, argv); }
