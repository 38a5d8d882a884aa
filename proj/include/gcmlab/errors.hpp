#pragma once

#include <stdexcept>
#include <string>

namespace gcm {

// Error taxonomy shared by the C++ core and mirrored by the C API status codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller passed something structurally wrong (sizes, ranges, bad suite name, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// Malformed serialized input (matrix literals, config documents).
struct ParseError : Error {
  using Error::Error;
};

// Input is mathematically outside the supported regime (coalescing spectrum,
// singular recovery system, pairing-symmetry violation at some order).
struct DegenerateInput : Error {
  using Error::Error;
};

// explain() was asked about a label that does not exist.
struct UnknownLabel : Error {
  using Error::Error;
};

}  // namespace gcm
