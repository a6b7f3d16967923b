#ifndef FERMAT_ERRORS_HH
#define FERMAT_ERRORS_HH

#include <stdexcept>
#include <string>

namespace fermat {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Mismatched rings, bad indices, malformed inputs.
class StructuralError : public Error {
public:
  using Error::Error;
};

// A projective degree was requested for a positive-dimensional scheme.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Cross-prime disagreement (or a divisibility violation) that survived the
// retry budget.
class BadPrimeError : public Error {
public:
  using Error::Error;
};

// Cooperative deadline expired inside a long-running computation.
class TimeoutError : public Error {
public:
  using Error::Error;
};

// Exact integer arithmetic would have wrapped around.
class OverflowError : public Error {
public:
  using Error::Error;
};

}  // namespace fermat

#endif  // FERMAT_ERRORS_HH
