#pragma once
#include <iosfwd>

namespace gs {

/// Runs the built-in property/oracle suite at small grid sizes, printing one
/// line per check. Returns the number of failed checks (0 = all good).
int run_self_checks(std::ostream& out);

} // namespace gs
