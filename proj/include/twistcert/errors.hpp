#pragma once

#include <stdexcept>
#include <string>

namespace twist {

// A curve input that is not a primitive nonzero integer pair.
struct invalid_curve : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed files, out-of-range indices, length mismatches.
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hypotheses of the requested criterion are not met by the input.
struct not_applicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Region membership queried for a curve with ||x||_A = 0.
struct outside_domain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certificate failed its own machine check, or the brute-force search
// contradicts a certified verdict. Maps to exit code 3 and must never fire.
struct inconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace twist
