#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdiag {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the CATDEF parser; carries the 1-based line of the offending declaration.
class ParseError : public Error
{
public:
    ParseError(int line, const std::string & message) :
        Error("line " + std::to_string(line) + ": " + message),
        _line(line)
    {
    }

    auto line() const -> int { return _line; }

private:
    int _line;
};

/// A category table or group table that violates its axioms.
class ValidationError : public Error
{
public:
    using Error::Error;
};

/// A computation would exceed one of the configured limits.
class LimitError : public Error
{
public:
    LimitError(const std::string & limit_name, std::size_t limit, std::size_t reached) :
        Error(limit_name + " exceeded: reached " + std::to_string(reached) + " (limit " + std::to_string(limit) + ")"),
        _reached(reached)
    {
    }

    auto reached() const -> std::size_t { return _reached; }

private:
    std::size_t _reached;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// An internal consistency identity failed; always a bug in the engine.
class EngineError : public Error
{
public:
    using Error::Error;
};

}
