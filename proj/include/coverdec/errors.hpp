#pragma once

#include <stdexcept>
#include <string>

#include "coverdec/rational.hpp"

namespace coverdec {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AngleTooLarge : GeometryError {
    AngleTooLarge() : GeometryError("wedge angle is at least pi") {}
    explicit AngleTooLarge(const std::string& what) : GeometryError(what) {}
};

struct DuplicatePoints : GeometryError {
    DuplicatePoints() : GeometryError("point set contains duplicates") {}
};

struct InvalidPolygon : GeometryError {
    using GeometryError::GeometryError;
};

struct NotConvex : GeometryError {
    NotConvex() : GeometryError("polygon is not convex") {}
};

struct WrongType : GeometryError {
    using GeometryError::GeometryError;
};

struct TooFewPoints : GeometryError {
    TooFewPoints() : GeometryError("point set smaller than decomposition order") {}
};

struct DegenerateSweep : GeometryError {
    using GeometryError::GeometryError;
};

struct NotBoundaryPoint : GeometryError {
    NotBoundaryPoint() : GeometryError("query point is not on the boundary") {}
};

struct SpecialPairPresent : GeometryError {
    int first, second;
    SpecialPairPresent(int i, int j)
        : GeometryError("wedge system contains a Special pair (" + std::to_string(i) +
                        ", " + std::to_string(j) + ")"),
          first(i), second(j) {}
};

struct NoSpecialPair : GeometryError {
    NoSpecialPair() : GeometryError("polygon has no Special pair of wedges") {}
};

struct NotSpecialPair : GeometryError {
    NotSpecialPair() : GeometryError("wedge pair is not Special") {}
};

struct FoldTooSmall : GeometryError {
    Int required;
    explicit FoldTooSmall(Int req)
        : GeometryError("covering fold below required threshold " + req.str()),
          required(std::move(req)) {}
};

struct TooLarge : GeometryError {
    using GeometryError::GeometryError;
};

struct CounterexampleFound : GeometryError {
    using GeometryError::GeometryError;
};

struct VerificationFailed : GeometryError {
    using GeometryError::GeometryError;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace coverdec
