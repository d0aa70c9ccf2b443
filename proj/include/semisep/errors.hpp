#pragma once

#include <stdexcept>
#include <string>

namespace semisep {

/// Malformed or schema-violating input. `where` is a JSON pointer when known.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, std::string where = "")
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// A search or enumeration would exceed its configured bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called on data that does not satisfy its precondition.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace semisep
