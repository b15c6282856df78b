#ifndef WPP_ERROR_HPP
#define WPP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wpp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Malformed or incomplete input data (files, literals, tables).
class ParseError : public Error {
public:
    using Error::Error;
};

// A size guard refused the request; the message carries the estimate.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace wpp

#endif  // WPP_ERROR_HPP
