#pragma once

#include <iosfwd>

namespace robsense {

// Exit codes: 0 success, 1 when some sensor cannot be backed up, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace robsense
