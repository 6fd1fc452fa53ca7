#ifndef STRATA_ERRORS_HPP
#define STRATA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace strata {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad JSON, bad rational literal, bad vector literal.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Matrix/tensor dimensions do not line up.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

/// A standing hypothesis of an operation is violated.  Distinct from an
/// empty stratum: rejecting an ill-posed query is not the same as answering
/// "empty".  `hypothesis()` names the failing condition.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& hypothesis, const std::string& msg)
        : Error(msg), hypothesis_(hypothesis) {}
    const std::string& hypothesis() const { return hypothesis_; }

private:
    std::string hypothesis_;
};

/// An enumeration exceeded a configured cap.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

} // namespace strata

#endif
