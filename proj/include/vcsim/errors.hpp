#pragma once

#include <stdexcept>
#include <string>

namespace vcsim {

// Bad configuration or unreadable input. The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A module invariant tripped during a run; always a bug, never expected
// in a healthy simulation. The CLI maps this to exit code 2.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace vcsim
