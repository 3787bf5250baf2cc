#pragma once

#include <stdexcept>
#include <string>

namespace swc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Argument outside a map's domain (chart at t >= 1, non-positive scale, ...). */
struct DomainError : Error {
    using Error::Error;
};

/* Ball / interval index out of range for its level. */
struct IndexError : Error {
    using Error::Error;
};

/* A function's support does not fit where an operation requires it. */
struct SupportError : Error {
    using Error::Error;
};

/* A sampled value escapes the lift window on the torus fiber. */
struct WindowError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/* An exact check found a counterexample; the message carries the witness. */
struct VerificationFailure : Error {
    using Error::Error;
};

/* Evaluation would need dyadic subdivision data beyond the configured bound.
   Purely a resource guard; raised only for points absurdly close to the x1=1
   face or for levels whose 2^n index space cannot be materialized. */
struct DepthLimitError : Error {
    using Error::Error;
};

} // namespace swc
