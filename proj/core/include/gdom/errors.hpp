#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdom {

// Base of every error raised by the library. The CLI maps ResourceError to
// exit status 2 and everything else to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments: out-of-range ids, violated preconditions, bad params.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// The input is well formed but the requested quantity is undefined on it,
/// e.g. total domination on a graph with an isolated vertex.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A size guard or capacity limit was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A vertex sequence repeats a vertex or names a vertex outside the graph.
class MalformedSequenceError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class ParseError : public ParameterError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ParameterError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace gdom
