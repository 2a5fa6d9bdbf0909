// errors.hpp
// Exception hierarchy shared by all modules; the CLI maps these to exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace ctxlab {

// Malformed or inconsistent user input (CLI exit code 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured cap (CLI exit code 3).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A produced certificate or witness failed its replay check (CLI exit code 4).
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ctxlab
