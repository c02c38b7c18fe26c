#pragma once

#include <stdexcept>
#include <string>

namespace tomo {

/// Malformed or inconsistent input (bad dimensions, invariant breach).
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Text that could not be parsed; carries the 1-based line number.
class ParseError : public InputError
{
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line)
    {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A pre-condition of an operation was not met by its caller, or an internal
/// invariant broke.
class ContractError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// A request that exceeds a built-in size guard.
class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace tomo
