#pragma once

#include <iosfwd>

namespace shadowham::cli {

/// Entry point of the `shadowham` command. Exit status: 0 on success
/// (including a iii-b "no Hamiltonian" answer), 1 when `verify` finds a
/// failing check, 2 on usage or validation errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shadowham::cli
