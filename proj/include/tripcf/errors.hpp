#pragma once

#include <stdexcept>
#include <string>

namespace tripcf {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, polynomials, permutations, specs).
struct ParseError : Error {
    using Error::Error;
};

/// Polynomial has a repeated root where a squarefree one is required.
struct NotSquarefree : Error {
    using Error::Error;
};

/// Cubic factors over the rationals where irreducibility is required.
struct Reducible : Error {
    using Error::Error;
};

/// Polynomial is not a monic integer cubic with constant term +-1.
struct NotUnitShape : Error {
    using Error::Error;
};

/// Cubic has no root strictly between 0 and 1.
struct NoRootInUnitInterval : Error {
    using Error::Error;
};

/// Arithmetic mixed elements of two distinct cubic fields.
struct FieldMismatch : Error {
    using Error::Error;
};

/// Division by an exact zero.
struct DivByZero : Error {
    using Error::Error;
};

/// Theorem / map parameters outside their admissible range.
struct ParameterRange : Error {
    using Error::Error;
};

/// Base class for errors raised while driving a map orbit.
struct MapError : Error {
    using Error::Error;
};

/// Projective image has first homogeneous coordinate exactly zero.
struct ProjectionPole : MapError {
    using MapError::MapError;
};

/// No digit k in [0, maxK] sends the point back into the triangle.
struct NoDigit : MapError {
    using MapError::MapError;
};

/// Orbit reached the triangle boundary (y' = 0 exactly); digits stop.
struct DegenerateOrbit : MapError {
    using MapError::MapError;
};

/// Internal inconsistency while canonicalizing a unit cubic.
struct CanonicalizationError : Error {
    using Error::Error;
};

/// Wraps a failure inside unit_pipeline with the failing stage named.
struct PipelineError : Error {
    PipelineError(std::string stage_, const std::string& what_)
        : Error("[" + stage_ + "] " + what_), stage(std::move(stage_)) {}
    std::string stage;
};

} // namespace tripcf
