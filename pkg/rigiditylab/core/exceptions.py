"""Custom exception classes for the application."""


class BaseRigidityError(Exception):
    """Base exception for all application errors."""
    pass


class ConfigurationError(BaseRigidityError):
    """Raised when an environment setting is missing or invalid."""
    pass


# ---------------------------------------------------------------------------
# Input validation
# ---------------------------------------------------------------------------

class ValidationError(BaseRigidityError):
    """Raised when validation fails."""
    pass


class DimensionMismatch(ValidationError):
    """Raised when a vector does not have the ambient dimension of its space."""
    pass


class LengthMismatch(ValidationError):
    """Raised when two configurations have different vertex counts."""
    pass


class GraphMismatch(ValidationError):
    """Raised when frameworks that must share a graph do not."""
    pass


class SpaceMismatch(ValidationError):
    """Raised when frameworks that must share a space do not."""
    pass


class UnsupportedSpace(ValidationError):
    """Raised when an operation is not defined for the given space kind."""
    pass


class SameVertex(ValidationError):
    """Raised when a vertex pair is degenerate."""
    pass


class SignatureOutOfRange(ValidationError):
    """Raised when a signature count s is outside 0..d."""
    pass


class ZeroScale(ValidationError):
    """Raised when a coordinate scaling factor is zero."""
    pass


class NonpositiveScale(ValidationError):
    """Raised when a coning scale is not positive."""
    pass


class OutsideBall(ValidationError):
    """Raised when a ball-model parameter does not lie in the open unit ball."""
    pass


class ParseError(ValidationError):
    """Raised when an input file cannot be parsed."""
    pass


class HaarCoordinatesRequired(ValidationError):
    """Raised when an operation needs a pair in (average, difference) coordinates."""
    pass


class NonCanonicalPoint(ValidationError):
    """Raised when a hyperbolic ray has no rational point on the locus."""
    pass


# ---------------------------------------------------------------------------
# Exact linear algebra
# ---------------------------------------------------------------------------

class LinearAlgebraError(BaseRigidityError):
    """Base exception for exact linear algebra failures."""
    pass


class NotSymmetric(LinearAlgebraError):
    """Raised when a symmetric matrix was required."""
    pass


class NotReal(LinearAlgebraError):
    """Raised when a real matrix was required but an entry has an imaginary part."""
    pass


class SingularMatrix(LinearAlgebraError):
    """Raised when an inverse or a unique solution does not exist."""
    pass


class SingularCayley(LinearAlgebraError):
    """Raised when I + A stayed singular on every redraw."""
    pass


class RankExceedsDimension(LinearAlgebraError):
    """Raised when a g-matrix has rank larger than the target dimension."""
    pass


# ---------------------------------------------------------------------------
# Geometry
# ---------------------------------------------------------------------------

class GeometryError(BaseRigidityError):
    """Base exception for framework-level failures."""
    pass


class NotEquivalent(GeometryError):
    """Raised when frameworks were required to be equivalent."""
    pass


class NotCongruent(GeometryError):
    """Raised when configurations were required to be congruent."""
    pass


class DegenerateSpan(GeometryError):
    """Raised when a configuration does not have full affine span."""
    pass


class AveragingViolation(GeometryError):
    """Raised when the averaged flex fails its exact check."""
    pass


class NoReflectableVertex(GeometryError):
    """Raised when no vertex can be reflected to give a non-congruent partner."""
    pass


class NotUpperConed(GeometryError):
    """Raised when a coned Minkowski framework is not on the upper sheet."""
    pass


class NotUpperCylindrical(GeometryError):
    """Raised when a coned framework is not upper cylindrical."""
    pass


class NotSpiky(GeometryError):
    """Raised when a coned Euclidean framework is not spiky."""
    pass


class Disconnected(GeometryError):
    """Raised when a connected graph was required."""
    pass


class SheetAmbiguous(GeometryError):
    """Raised when an equivalent coned framework is neither upper nor lower coned."""
    pass


class ToleranceExceeded(GeometryError):
    """Raised when a float-mode step leaves a residual above its tolerance."""
    pass


# ---------------------------------------------------------------------------
# Realization oracle
# ---------------------------------------------------------------------------

class OracleError(BaseRigidityError):
    """Base exception for realization enumeration."""
    pass


class NotLocallyRigid(OracleError):
    """Raised when enumeration is requested for a flexible graph."""
    pass


class NoConvergence(OracleError):
    """Raised when a solver start fails to converge."""
    pass
