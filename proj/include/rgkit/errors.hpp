#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rgkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NotGraphicError : public Error {
public:
    using Error::Error;
};

/// Enumeration stopped because more than `limit` realizations exist.
class LimitExceededError : public Error {
public:
    LimitExceededError(std::size_t limit, std::size_t partial_count)
        : Error("realization limit of " + std::to_string(limit) + " exceeded"),
          limit_(limit), partial_count_(partial_count) {}

    std::size_t limit() const noexcept { return limit_; }
    /// Number of realizations produced before giving up (always limit + 1).
    std::size_t partial_count() const noexcept { return partial_count_; }

private:
    std::size_t limit_;
    std::size_t partial_count_;
};

class InvalidCycleError : public Error {
public:
    using Error::Error;
};

class InvalidEmbeddingError : public Error {
public:
    using Error::Error;
};

class MixedSequenceError : public Error {
public:
    using Error::Error;
};

class PartitionError : public Error {
public:
    using Error::Error;
};

} // namespace rgkit
