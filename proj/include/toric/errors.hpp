#ifndef TORIC_ERRORS_HPP
#define TORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toric {

// Input that fails to parse (CLI exit code 2).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated precondition on an otherwise well-formed call (CLI exit code 2).
struct argument_error : std::runtime_error {
    explicit argument_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds a configured resource cap (CLI exit code 3).
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; indicates a bug, not bad input (CLI exit code 4).
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace toric

#endif
