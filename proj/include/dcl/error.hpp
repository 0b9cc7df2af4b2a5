#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// An affine form evaluated to a non-integer; `denominator()` is the reduced
/// denominator of the offending value.
class NonIntegralError : public Error {
public:
    NonIntegralError(const std::string& what, std::int64_t denominator)
        : Error(what), denominator_(denominator) {}

    std::int64_t denominator() const noexcept { return denominator_; }

private:
    std::int64_t denominator_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    /// 1-based line number, 0 when the input is not line oriented.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EndpointOutOfRange : public Error {
public:
    using Error::Error;
};

class SizeLimitError : public Error {
public:
    using Error::Error;
};

class LimitExceeded : public Error {
public:
    LimitExceeded(const std::string& what, std::uint64_t reached)
        : Error(what), reached_(reached) {}

    std::uint64_t reached() const noexcept { return reached_; }

private:
    std::uint64_t reached_;
};

class InvalidT : public Error {
public:
    using Error::Error;
};

class NTooSmall : public Error {
public:
    NTooSmall(const std::string& what, std::int64_t threshold)
        : Error(what), threshold_(threshold) {}

    std::int64_t threshold() const noexcept { return threshold_; }

private:
    std::int64_t threshold_;
};

/// A gadget of the construction failed geometric validation at an in-range
/// index. This is a finding about the construction, not a usage error.
class InvalidInstance : public Error {
public:
    using Error::Error;
};

}  // namespace dcl
