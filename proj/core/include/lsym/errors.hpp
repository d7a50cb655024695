#pragma once

#include <stdexcept>
#include <string>

namespace lsym {

// Bad input: violated precondition, malformed data, out-of-range parameter.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal computation could not complete (no exact square root, division by zero).
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lsym
