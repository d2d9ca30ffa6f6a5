// Release gate: runs the ten toolkit-wide acceptance checks and prints the
// full report. Exit status 0 only when every check passes, so CI can gate
// on this binary directly.
#include <cstdlib>
#include <iostream>
#include <string>

#include "rotorsym/verify.hpp"

#ifndef ROTORSYM_TEST_DATA_DIR
#define ROTORSYM_TEST_DATA_DIR ""
#endif

int main() {
    std::string data_dir = ROTORSYM_TEST_DATA_DIR;
    if (const char* env = std::getenv("ROTORSYM_DATA_DIR")) {
        data_dir = env;
    }
    const auto checks = rotorsym::verify::acceptance_checks(data_dir);
    rotorsym::verify::write_report(std::cout, checks);
    return rotorsym::verify::all_pass(checks) ? 0 : 1;
}
