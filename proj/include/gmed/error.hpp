#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmed {

enum class ErrorKind {
    invalid_input,
    capability,
    resource,
    not_positive_definite,
    io,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::capability: return "capability";
    case ErrorKind::resource: return "resource";
    case ErrorKind::not_positive_definite: return "not_positive_definite";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

/// Single exception type for the library; `kind()` distinguishes the failure class.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& message)
{
    throw Error(ErrorKind::invalid_input, message);
}

inline void require(bool condition, const std::string& message)
{
    if (!condition) throw_invalid(message);
}

} // namespace gmed
