#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace iap {

/// Entry point of the `iap` tool; args excludes the program name.
/// Exit codes: 0 found / verdict settled, 1 nothing found / undecided, 2 bad input.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}
