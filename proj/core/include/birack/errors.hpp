#pragma once

#include <stdexcept>
#include <string>

namespace birack {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (polynomials, ring headers, Gauss codes, files).
/// Messages include a position or line where it makes sense.
struct ParseError : Error {
  using Error::Error;
};

/// Structurally well-formed input that violates a required property
/// (birack axioms, module relations, mismatched rings, bad shapes).
struct ValidationError : Error {
  using Error::Error;
};

/// A computation that is not defined in the requested configuration,
/// e.g. gcd of minors over a composite modulus or a multivariate ring.
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace birack
