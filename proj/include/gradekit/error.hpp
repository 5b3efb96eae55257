#pragma once

#include <stdexcept>
#include <string>

namespace gradekit {

/// Domain error: a precondition of a library operation was violated.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a bounded enumeration could not settle a membership question.
class inconclusive_error : public error {
public:
    explicit inconclusive_error(const std::string& what) : error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw error(what);
}

} // namespace gradekit
