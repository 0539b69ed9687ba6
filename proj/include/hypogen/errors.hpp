#pragma once

#include <stdexcept>
#include <string>

namespace hypogen {

// Problems with input data (malformed files, inconsistent records).
// The CLI maps these to exit code 1.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with how the tool was invoked (missing/invalid options).
// The CLI maps these to exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hypogen
