#pragma once

#include <iosfwd>

namespace cubix {

// Command-line entry point, shared by the cubix binary and in-process tests.
// Exit codes: 0 clean, 1 violations found, 2 usage error, 3 parse or
// structure error. Output is byte-identical for a fixed input and flag set,
// independent of --threads.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Variant writing to std::cout / std::cerr.
int run_cli(int argc, const char* const* argv);

}  // namespace cubix
