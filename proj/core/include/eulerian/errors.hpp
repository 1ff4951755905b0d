#pragma once

#include <stdexcept>
#include <string>

namespace eulerian {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polynomial division left a nonzero remainder where exactness was required.
/// Surfacing this usually means a divisibility identity failed.
struct NonExactDivision : Error {
  using Error::Error;
};

/// Two series with different main variables were combined.
struct MixedMainVariable : Error {
  using Error::Error;
};

/// A series coefficient was assigned a value that mentions the main variable.
struct MainVariableInCoefficient : Error {
  using Error::Error;
};

/// Series inversion requires an invertible (nonzero) constant coefficient.
struct NonUnitConstantTerm : Error {
  using Error::Error;
};

/// Series exponential requires a zero constant coefficient.
struct NonzeroConstantTerm : Error {
  using Error::Error;
};

/// A rational function was given a zero denominator.
struct ZeroDenominator : Error {
  using Error::Error;
};

struct NegativeIndex : Error {
  using Error::Error;
};

/// Enumeration oracle called beyond its factorial/exponential budget.
struct OracleBoundExceeded : Error {
  using Error::Error;
};

/// Triangle access outside 0 <= k <= n.
struct IndexOutOfTriangle : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct UnknownIdentity : Error {
  using Error::Error;
};

/// A two-index identity check was run without its second index bound.
struct MissingSecondIndex : Error {
  using Error::Error;
};

/// Malformed polynomial / rational text.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace eulerian
