#pragma once

#include <stdexcept>
#include <string>

namespace lrw {

// Bad caller input (out-of-range vertex, self-loop, malformed parameters).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Instance exceeds an exactness guard; message names the guard to raise.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition between modules was violated.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// A structural property that must hold failed at runtime; carries a witness.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unparsable or internally inconsistent serialized data.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lrw
