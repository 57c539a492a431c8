#pragma once

#include <stdexcept>
#include <string>

namespace hessberg {

// Malformed or out-of-range user input. Exit code 1 at the CLI.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant that must always hold failed. The exhaustive
// suites double as a falsification harness, so these are kept distinct from
// input errors. Exit code 2 at the CLI.
struct PropertyViolation : std::runtime_error {
    explicit PropertyViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hessberg
