#pragma once

#include <stdexcept>
#include <string>

namespace starinv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ZeroMatrix : public Error {
public:
    using Error::Error;
};

class IndexTooSmall : public Error {
public:
    using Error::Error;
};

// A post-verification failed; exact formulas should never trip this.
class InternalError : public Error {
public:
    using Error::Error;
};

class InvalidSpec : public Error {
public:
    using Error::Error;
};

class NotMoorePenroseInvertible : public Error {
public:
    using Error::Error;
};

class OutOfTableScope : public Error {
public:
    using Error::Error;
};

class Unsatisfiable : public Error {
public:
    using Error::Error;
};

}  // namespace starinv
