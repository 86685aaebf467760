#pragma once

#include <stdexcept>
#include <string>

namespace frobkit {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

/// A closure or carrier grew past its configured element cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class NoSolution : public Error {
public:
    using Error::Error;
};

/// An exact division that must be integral had a remainder.
class NonIntegral : public Error {
public:
    using Error::Error;
};

class InvalidDivisor : public Error {
public:
    using Error::Error;
};

class UnsupportedFamily : public Error {
public:
    using Error::Error;
};

class UnsupportedBranch : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

} // namespace frobkit
