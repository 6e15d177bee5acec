#pragma once

#include <stdexcept>
#include <string>

namespace panogen {

// Thrown when a caller violates an operation's precondition (bad shapes,
// invalid ratios, malformed files, ...). Maps to exit code 2 in the CLI.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values where finite ones are required. Exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// File I/O failures, with the offending path in the message. Exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A verification run (verify-erp) exceeded its tolerance. Exit code 4.
struct VerifyError : std::runtime_error {
    explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace panogen
