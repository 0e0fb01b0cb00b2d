#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line driver. Exit codes: 0 = verified/constructed OK,
// 1 = verification failed / condition violated / search exhausted or timed
// out, 2 = usage or parse error. Output is deterministic for fixed inputs
// (timing lines are opt-in via --timing).

namespace msd {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in);

}  // namespace msd
