#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqdyn {

/// Command-line driver. Subcommands: classify, verdict, fiber, heights,
/// identities, lemma51, collide, params. Exit codes: 0 success, 1 usage or
/// parse errors, 2 failed assertions.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqdyn
