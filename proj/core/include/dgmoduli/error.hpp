#pragma once

#include <stdexcept>
#include <string>

namespace dgm {

// Exit-code contract: 2 = invalid input, 3 = precondition refused,
// 4 = undetermined verdict where a decision was required.
struct Error : std::runtime_error {
    int exit_code;
    Error(const std::string& msg, int code) : std::runtime_error(msg), exit_code(code) {}
};

struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg, 2) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg, 3) {}
};

struct UndeterminedError : Error {
    explicit UndeterminedError(const std::string& msg) : Error(msg, 4) {}
};

// Internal consistency failure: a theorem-level assertion did not hold.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal: " + msg, 1) {}
};

}  // namespace dgm
