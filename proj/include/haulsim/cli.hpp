#pragma once

namespace haulsim {

// Entry point for the haulsim command line tool. Returns the process exit
// code: 0 success, 2 for bad input or usage, 1 for internal errors.
int run_cli(int argc, char** argv);

}  // namespace haulsim
