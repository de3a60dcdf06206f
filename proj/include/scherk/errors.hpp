#pragma once

#include <stdexcept>
#include <string>

namespace scherk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text that does not match the expected schema.
struct ParseError : Error {
  using Error::Error;
};

/// Operands live in different ambient dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A matrix/translation pair that is not an isometry (AᵀA ≠ I), or a
/// reflection specification that does not describe a hyperplane.
struct InvalidIsometry : Error {
  using Error::Error;
};

/// Precondition violation on an otherwise well-formed call
/// (e.g. bisecting a point with itself).
struct InvalidArgument : Error {
  using Error::Error;
};

/// A chain or factorization that does not satisfy the structural
/// requirements of the requested operation.
struct InvalidChain : Error {
  using Error::Error;
};

/// Poset element outside the context it is queried in, or a context that
/// does not support the operation.
struct InvalidPoset : Error {
  using Error::Error;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char *what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimension " +
                            std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace scherk
