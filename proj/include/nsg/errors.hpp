#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A gap set whose complement is not closed under addition.
class ClosureViolation : public Error {
public:
    using Error::Error;
};

/// The oracle exceeded its configured node budget.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the range an operation is defined on.
class OutOfRange : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotARightGenerator : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

/// A 64-bit counter would wrap.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A task of the parallel driver failed; carries the first failure message.
class WorkerFailure : public Error {
public:
    using Error::Error;
};

} // namespace nsg
