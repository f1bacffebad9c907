#pragma once

#include <stdexcept>
#include <string>

namespace tl {

// Error taxonomy matching the CLI exit codes: invalid_input -> 1,
// infeasible -> 2, internal_error -> 3.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments or malformed data from the caller/user.
struct invalid_input : error {
    explicit invalid_input(const std::string& msg) : error(msg) {}
};

// A configuration that cannot be run (unsupported ring, non-invertible
// parameter, resolution budget exceeded).
struct infeasible : error {
    explicit infeasible(const std::string& msg) : error(msg) {}
};

// A broken internal invariant (d^2 != 0, nonzero conversion remainder, ...).
// Never the caller's fault.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

}  // namespace tl
