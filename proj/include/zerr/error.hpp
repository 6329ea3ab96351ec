#pragma once

#include <stdexcept>
#include <string>

namespace zerr {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric parameter is outside its documented domain (e.g. cycle(2)).
class invalid_parameter : public error {
public:
    using error::error;
};

/// Malformed input data: out-of-range letters, wrong polynomial shape, ...
class invalid_input : public error {
public:
    using error::error;
};

/// A configured size or search budget would be exceeded.
class resource_limit : public error {
public:
    using error::error;
};

/// Closed forms need simple roots.
class unsupported_multiplicity : public error {
public:
    using error::error;
};

/// Union branches or star iterates of a regular expression overlap.
class ambiguous_expression : public error {
public:
    ambiguous_expression(const std::string& subexpression, const std::string& what)
        : error(what), subexpression_(subexpression) {}

    const std::string& subexpression() const noexcept { return subexpression_; }

private:
    std::string subexpression_;
};

} // namespace zerr
