#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hml {

// Error kinds are short stable slugs ("invalid-range", "domain-mismatch", ...)
// so callers and tests can match on them without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
    throw Error(std::move(kind), message);
}

inline void require(bool cond, const char* kind, const std::string& message) {
    if (!cond) fail(kind, message);
}

} // namespace hml
