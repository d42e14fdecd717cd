#pragma once

#include <stdexcept>
#include <string>

namespace hyperrig {

// Raised when caller-supplied data violates an operation's preconditions.
// The CLI maps it to exit code 2; anything else escaping is an internal failure.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool cond, const std::string& msg)
{
    if (!cond) throw InputError(msg);
}

}  // namespace hyperrig
