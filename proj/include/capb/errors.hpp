#pragma once

#include <stdexcept>

namespace capb {

// Base type of every error this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cap radius outside the range the caller accepts.
struct RadiusOutOfRange : Error {
  using Error::Error;
};

// Two base caps of a cap body overlap in their interiors.
struct OverlappingCaps : Error {
  using Error::Error;
};

// A would-be vertex lies inside (or on) the unit ball.
struct VertexInsideBall : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of a real-valued function.
struct DomainError : Error {
  using Error::Error;
};

// An exact evaluation hit an argument certifiably outside an operation's
// domain (e.g. arccos of an interval strictly outside [-1, 1]).
struct DomainViolation : Error {
  using Error::Error;
};

// Interval refinement reached the precision cap without separating a value
// from a rounding boundary.
struct TieUnresolved : Error {
  using Error::Error;
};

// A certificate or illumination re-check failed.
struct VerificationFailed : Error {
  using Error::Error;
};

// Randomized search exhausted its budget without success.
struct SearchExhausted : Error {
  using Error::Error;
};

// An integer program with no feasible point; cannot occur for well-formed
// models (the zero vector is feasible), so it signals a construction bug.
struct InfeasibleModel : Error {
  using Error::Error;
};

// Malformed or unreadable input file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace capb
