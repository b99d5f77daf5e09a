#pragma once

#include <stdexcept>
#include <string>

namespace sumstruct {

// Bad arguments or violated preconditions.  CLI exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically valid input that this build does not handle
// (e.g. an infinite exceptional set).  CLI exit code 2.
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded.  CLI exit code 3.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A provable invariant failed at runtime; indicates a bug.  CLI exit code 1.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace sumstruct
