#pragma once

#include <ostream>

namespace stern {

// Entry point of the `stern` tool. Documents go to `out` (or --out FILE);
// failures print one JSON line {"error": {...}} to `err` and return nonzero.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stern
