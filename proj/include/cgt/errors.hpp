#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

// Malformed input or a violated precondition detectable up front.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An oracle size guard was exceeded; the call is refused rather than attempted.
struct refusal_error : std::runtime_error {
    explicit refusal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A bug inside this library (an invariant that construction should have guaranteed).
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cgt
