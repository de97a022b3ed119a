#pragma once

#include <stdexcept>
#include <string>

namespace sheafcx {

// Every failure the library reports derives from Error. The CLI maps the
// concrete type to an exit code, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched rings, exponent vectors of the wrong length, dimension clashes.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Input is well-formed but outside the domain of the invariant.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured cap (generators, search depth) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Cached data disagrees with a fresh computation or with itself.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace sheafcx
