#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hatp4 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 / hypergraph text. `offset` is the byte (or line) index
/// where decoding failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An argument violates an operation's precondition (bad vertex, non-edge,
/// graph outside a lemma's hypothesis class, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The requested instance is beyond the supported scale of an exhaustive method.
class ScaleError : public Error {
public:
    using Error::Error;
};

/// A configured resource budget (memory, level size) was exceeded.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, int level_reached)
        : Error(what), level_reached_(level_reached) {}

    int level_reached() const noexcept { return level_reached_; }

private:
    int level_reached_;
};

}  // namespace hatp4
