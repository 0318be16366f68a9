#ifndef EVOALG_ERROR_HPP
#define EVOALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace evoalg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed descriptor, scalar string, or JSON document.
class ParseError : public Error {
public:
    using Error::Error;
};

// Operands live in different fields, or shapes do not match.
class MismatchError : public Error {
public:
    using Error::Error;
};

// Division by zero, non-prime modulus, zero conductor and similar.
class DomainError : public Error {
public:
    using Error::Error;
};

// Structure matrix is singular where an idempotent algebra is required.
class SingularError : public Error {
public:
    using Error::Error;
};

// A size cap (search dimension, group order, census volume) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace evoalg

#endif  // EVOALG_ERROR_HPP
