#pragma once

#include <ostream>

// Quick invariant checks on the installed library. Returns the number of
// failed checks.
int run_selftest(std::ostream& out);
