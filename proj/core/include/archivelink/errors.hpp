// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace archivelink {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input that can be pointed at: a file/line pair plus a reason.
class ParseError : public Error {
public:
    ParseError(std::string file, std::size_t line, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ": " + msg),
          file_(std::move(file)),
          line_(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

// Well-formed input that violates a semantic rule (duplicate id, dangling
// reference, bad URL, inconsistent configuration).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure: missing file, unwritable directory.
class IoError : public Error {
public:
    using Error::Error;
};

// Remote endpoint unreachable after retries.
class NetworkError : public Error {
public:
    using Error::Error;
};

// A requested archived body does not exist in the backend.
class NotFoundError : public Error {
public:
    using Error::Error;
};

// Backend misconfiguration discovered at query time (fixture dir missing).
class BackendError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace archivelink
