#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Base class for every recoverable error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class NotUnitary : public Error {
public:
    using Error::Error;
};

// A matrix that is supposed to describe a state fails trace/positivity checks.
class NotPhysical : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class NotAProbabilityTable : public Error {
public:
    using Error::Error;
};

class NotTwoQubit : public Error {
public:
    using Error::Error;
};

class NotStandardForm : public Error {
public:
    using Error::Error;
};

class NotClassicalForm : public Error {
public:
    using Error::Error;
};

class SingularMarginal : public Error {
public:
    using Error::Error;
};

// Raised when a correlation coefficient is requested for an observable pair
// with vanishing variance (the 0/0 singularity of pure product states).
class UndefinedPcc : public Error {
public:
    using Error::Error;
};

class NumericalInstability : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

} // namespace qcorr
