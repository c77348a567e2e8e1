#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsrpm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graph would exceed the vertex cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Parameters outside an operation's documented range.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Distances (and therefore the distance spectrum) are undefined for disconnected graphs.
class ConnectivityError : public Error {
public:
    using Error::Error;
};

/// Malformed graph6 or edge-list input. `offset` is the byte (or line) position of the fault.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Root isolation was given an interval without a sign change.
class BracketError : public Error {
public:
    using Error::Error;
};

/// Power iteration hit its iteration cap. Carries the last certified bracket.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, long double lo, long double hi)
        : Error(what), lo_(lo), hi_(hi) {}

    long double lo() const noexcept { return lo_; }
    long double hi() const noexcept { return hi_; }

private:
    long double lo_;
    long double hi_;
};

}  // namespace dsrpm
