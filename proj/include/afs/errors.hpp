#pragma once

#include <stdexcept>
#include <string>

namespace afs {

// Thrown when an operation would exceed a configured enumeration limit.
// Callers that want larger instances raise the limit explicitly; nothing
// is ever truncated silently.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}
