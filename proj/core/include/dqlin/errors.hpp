#pragma once

#include <stdexcept>
#include <string>

namespace dqlin {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad permutation, bad matrix file, shape mismatch.
struct InputError : Error {
    using Error::Error;
};

// Operation called outside its definition domain (e.g. a Hermitian-only
// routine on a general matrix).
struct DomainError : Error {
    using Error::Error;
};

// Factorial-size enumeration requested above the configured cap.
struct SizeCapError : Error {
    using Error::Error;
};

// Pivot breakdown: the matrix is not invertible.
struct SingularError : Error {
    using Error::Error;
};

// An iterative routine exceeded its sweep budget or a postcondition
// verification failed.
struct ConvergenceError : Error {
    using Error::Error;
};

} // namespace dqlin
