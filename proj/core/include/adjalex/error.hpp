#pragma once

#include <stdexcept>
#include <string>

namespace adjalex {

enum class ErrorKind {
    Syntax,
    Precondition,
    Truncation,
    Inconsistency,
    Unsupported,
    Config,
    FixtureMismatch
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax: return "syntax";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Truncation: return "truncation";
        case ErrorKind::Inconsistency: return "inconsistency";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::Config: return "config";
        case ErrorKind::FixtureMismatch: return "fixture-mismatch";
    }
    return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

}  // namespace adjalex
