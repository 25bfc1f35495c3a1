"""Exception types raised across the package."""
from __future__ import annotations


class PetInduceError(Exception):
    """Base class of every error raised on purpose by this package."""


class ParseError(PetInduceError, ValueError):
    """Malformed textual or JSON input."""


class GeometryError(PetInduceError, ValueError):
    """A geometric invariant does not hold."""


class ZeroScale(GeometryError):
    """Scaling or conjugating by the factor 0."""


class DomainMismatch(GeometryError):
    """Two objects that must share a domain do not."""


class OnBoundary(PetInduceError):
    """A point lies on an atom boundary, where the coding/map is undefined."""

    def __init__(self, message: str, point=None, n=None):
        super().__init__(message)
        self.point = point
        self.n = n


class NotEquivalent(PetInduceError):
    """Two partitions are not equal up to a relabeling."""


class NonTerminating(PetInduceError):
    """The induction loop hit its iteration cap."""


class EmptyWindow(PetInduceError):
    """The induction window is not full-dimensional."""


class ShapeMismatch(PetInduceError, ValueError):
    """Two-dimensional concatenation is undefined for these shapes."""


class UnknownLetter(PetInduceError, KeyError):
    """A morphism is applied to a letter outside its domain."""


class NotAPermutation(PetInduceError, ValueError):
    """The letter map is not a bijection of 1x1 images."""


class NotEndomorphism(PetInduceError, ValueError):
    """The morphism's images use letters outside its domain."""


class SelfInductionFailed(PetInduceError):
    """The renormalization chain does not close up."""


class RationalAlpha(PetInduceError, ValueError):
    """The continued fraction expansion terminated early."""

    def __init__(self, message: str, digits=None):
        super().__init__(message)
        self.digits = list(digits or [])
