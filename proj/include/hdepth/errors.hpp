#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hdepth {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    /// Short machine-readable tag, e.g. "NonCoprime".
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Caller supplied something outside an operation's domain.
class InputError : public Error {
public:
    using Error::Error;
};

/// A theorem-backed invariant failed; always a bug in this library.
class InternalError : public Error {
public:
    using Error::Error;
};

class NonCoprime : public InputError {
public:
    explicit NonCoprime(std::int64_t gcd)
        : InputError("NonCoprime", "weights are not coprime (gcd " + std::to_string(gcd) + ")"),
          gcd_(gcd) {}
    std::int64_t gcd() const noexcept { return gcd_; }

private:
    std::int64_t gcd_;
};

class EqualWeights : public InputError {
public:
    explicit EqualWeights(std::int64_t d)
        : InputError("Equal", "weights are equal (" + std::to_string(d) + ")") {}
};

class NotNonnegative : public InputError {
public:
    NotNonnegative() : InputError("NotNonnegative", "series has a negative coefficient") {}
};

class InvariantBroken : public InternalError {
public:
    explicit InvariantBroken(const std::string& what) : InternalError("InvariantBroken", what) {}
};

inline InputError input_error(const std::string& kind, const std::string& what)
{
    return InputError(kind, what);
}

} // namespace hdepth
