"""
Custom exceptions for the honda-verify library.
"""


class HondaVerifyError(Exception):
    """Base class for all honda-verify specific errors."""
    pass


class ConfigurationError(HondaVerifyError):
    """Raised for general configuration issues."""
    pass


# --- algebra -------------------------------------------------------------

class AlgebraError(HondaVerifyError):
    """Base class for finite field, tensor algebra and Witt vector errors."""
    pass


class ReducibleModulusError(AlgebraError):
    """Raised when a field modulus fails the irreducibility test."""
    pass


class FieldMismatchError(AlgebraError):
    """Raised when elements of different fields or algebras are combined."""
    pass


class EmbeddingError(AlgebraError):
    """Raised when a subfield embedding GF(p^s) -> GF(p^r) does not exist."""
    pass


class WittArithmeticError(AlgebraError):
    """Raised for Witt vector operations outside the supported fragment."""
    pass


# --- covectors -----------------------------------------------------------

class CovectorError(HondaVerifyError):
    """Base class for Witt covector errors."""
    pass


class NilpotenceViolation(CovectorError):
    """
    Raised when an entry at depth >= 2 has a non-zero p-th power, so the
    truncated addition polynomial no longer computes the group law.
    """
    pass


class IncompatibleTailError(CovectorError):
    """Raised when two periodic covectors with different tail rules are added."""
    pass


# --- raynaud schemes and honda systems -----------------------------------

class RaynaudError(HondaVerifyError):
    """Base class for Raynaud scheme and Honda system errors."""
    pass


class InvalidSchemeError(RaynaudError):
    """Raised for unsupported (p, r, delta) data."""
    pass


class InvalidPairing(RaynaudError):
    """Raised when an exponent pair admits no or several carry lengths h."""
    pass


class PrecisionError(RaynaudError):
    """Raised when a w-map contribution at depth >= 2 is not visibly in pA."""
    pass


# --- ext groups and ramified modules -------------------------------------

class ExtDeformError(HondaVerifyError):
    """Base class for extension counting and M_{A'} errors."""
    pass


class EnumerationBoundExceeded(ExtDeformError):
    """Raised when a brute-force enumeration would exceed the configured bound."""
    pass


class DegreeOutOfRange(ExtDeformError):
    """Raised when the ramification degree e is outside 1 <= e <= p - 1."""
    pass


class UnsupportedModuleError(ExtDeformError):
    """Raised when a Honda system does not have the supersingular (F, V) shape."""
    pass


# --- curves --------------------------------------------------------------

class CurveError(HondaVerifyError):
    """Base class for elliptic curve errors."""
    pass


class CurveSpecError(CurveError):
    """Raised when a textual curve or prime specification cannot be parsed."""
    pass


class SingularCurve(CurveError):
    """Raised when a Weierstrass model has zero discriminant."""
    pass


class NonIntegralModel(CurveError):
    """Raised when a coefficient has negative valuation at the chosen prime."""
    pass


class SingularReduction(CurveError):
    """Raised when the reduced curve is singular over the residue field."""
    pass


class BadReduction(CurveError):
    """Raised when an operation needs good reduction and the model has none."""
    pass


class PrecisionTooLow(CurveError):
    """Raised when a formal group series is requested below precision p^2."""
    pass


class UnsupportedPrime(CurveError):
    """Raised when a criterion is asked for a prime it is not stated for."""
    pass


class PrimeNotSplit(CurveError):
    """Raised when a torsion-bound prime does not split in the quadratic field."""
    pass


class BadReductionPrime(CurveError):
    """Raised when a torsion-bound prime is a prime of bad reduction."""
    pass


class NoBoundPrimes(CurveError):
    """Raised when a torsion bound is requested with an empty prime list."""
    pass


class MissingAssumption(CurveError):
    """Raised when a required external assumption (rank flag, label) is absent."""
    pass


class HasseBoundViolation(CurveError):
    """Raised when a point count falls outside the Hasse interval."""
    pass


# --- number fields -------------------------------------------------------

class NumberFieldError(HondaVerifyError):
    """Base class for number field errors."""
    pass


class SearchInconclusive(NumberFieldError):
    """
    Raised when a principal generator search exhausts its height bound.
    This means "not verified", never "non-trivial class found".
    """
    pass
