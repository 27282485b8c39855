#pragma once

#include <stdexcept>

namespace convdom {

/// Bad user input: malformed files, invalid parameters. CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical procedure could not complete: empty coefficient windows,
/// unreachable rational precision, failed separation. CLI exit code 3.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace convdom
