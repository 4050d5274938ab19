#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorKind {
    usage,               // bad arguments / preconditions
    unsupported_weight,  // weight outside the one-dimensional level-1 spaces
    invalid_level,       // level/conductor inconsistency (e.g. additive reduction)
    load,                // malformed or inconsistent coefficient file
    search_exhausted,    // table too short to contain what was searched for
    invariant_violation, // a structural invariant failed at runtime
    internal,            // guard tripped inside an algorithm (should not happen)
};

class Error : public std::runtime_error {
 public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

 private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::usage: return "usage";
        case ErrorKind::unsupported_weight: return "unsupported-weight";
        case ErrorKind::invalid_level: return "invalid-level";
        case ErrorKind::load: return "load";
        case ErrorKind::search_exhausted: return "search-exhausted";
        case ErrorKind::invariant_violation: return "invariant-violation";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

}  // namespace hecke
