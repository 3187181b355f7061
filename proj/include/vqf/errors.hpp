#pragma once

#include <stdexcept>
#include <string>

namespace vqf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inversion of a quaternion whose modulus is below the configured epsilon.
struct ZeroDivisor : Error {
    using Error::Error;
};

// rank1_spectral called with a row vector of squared norm outside [0, 1).
struct DomainError : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

// Point has vanishing vector part; the operator coefficients are singular there.
struct SingularVectorPart : Error {
    using Error::Error;
};

// Symmetric-product machinery refuses degrees above 8 (8! permutations).
struct DegreeCap : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct BadBounds : Error {
    using Error::Error;
};

struct StencilOutOfDomain : Error {
    using Error::Error;
};

struct SegmentLeavesDomain : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct SingularConstantTerm : Error {
    using Error::Error;
};

struct SingularPencil : Error {
    using Error::Error;
};

struct OutsideOmega1 : Error {
    using Error::Error;
};

}  // namespace vqf
