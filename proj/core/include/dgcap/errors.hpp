#pragma once

#include <stdexcept>
#include <string>

namespace dgcap {

// Error categories map onto the CLI exit-code contract:
//   SchemaError -> 2, PhysicsError -> 3, NumericalError -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or invalid input documents (design files, CSV).
class SchemaError : public Error {
public:
    using Error::Error;
};

// Violations of physical-domain invariants (gaps, areas, stacking rules).
class PhysicsError : public Error {
public:
    using Error::Error;
};

// Solver breakdowns: lost positive definiteness, failed iterations.
class NumericalError : public Error {
public:
    using Error::Error;
};

class NonPositiveGap : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class GapClosed : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class NonPositiveCapacitance : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class DimpleViolation : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

// Bias exceeds the fold voltage: no stable equilibrium exists.
class PullIn : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class TooFewElements : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class MeshMisaligned : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class SpanMismatch : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class WrongLayerCount : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class NoConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Stiffness matrix lost positive definiteness (compressive prestress at or
// beyond the buckling load).
class SingularSystem : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace dgcap
