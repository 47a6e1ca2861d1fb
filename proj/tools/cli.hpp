#pragma once

#include <iosfwd>

// Entry point of the tssl command, with injectable streams so tests can
// drive it in-process. Returns the exit code (0 ok, 1 partial failure,
// 2 fatal).
int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);
