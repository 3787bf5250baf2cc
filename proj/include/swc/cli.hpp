#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swc::cli {

/* Exit codes: 0 = pass, 1 = a verification found a counterexample,
 * 2 = operational error (bad flags, unreadable file, contract violation). */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace swc::cli
