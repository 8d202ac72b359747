#pragma once

#include <stdexcept>
#include <string>

namespace qfrob {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar layer
struct DivisionByZero : Error {
    using Error::Error;
};
struct PoleAtPoint : Error {
    using Error::Error;
};
struct ZeroBase : Error {
    using Error::Error;
};
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : Error("parse error at position " + std::to_string(pos) + ": " + what), position(pos) {}
};

// Linear algebra
struct ShapeError : Error {
    using Error::Error;
};
struct InconsistentSystem : Error {
    using Error::Error;
};

// Hecke / symmetry layer
struct IndexError : Error {
    using Error::Error;
};
struct InvalidPartition : Error {
    using Error::Error;
};
struct InvalidTableau : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct BraidViolation : Error {
    using Error::Error;
};
struct HeckeViolation : Error {
    using Error::Error;
};
struct NotSkewInvertible : Error {
    using Error::Error;
};
struct Inconclusive : Error {
    using Error::Error;
};
struct BoundExceeded : Error {
    using Error::Error;
};

// RE algebra / spectral layer
struct DegreeMismatch : Error {
    using Error::Error;
};
struct NonPolynomialResult : Error {
    using Error::Error;
};
struct FamilyError : Error {
    using Error::Error;
};

}  // namespace qfrob
