#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace twist {

// Dispatches one invocation. Exit codes: 0 a verdict or report was produced
// (unknown included), 2 invalid input or inapplicable hypotheses, 3 an
// internal consistency check failed (a certificate contradicted by its own
// witness or by the brute-force search; must never happen).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace twist
