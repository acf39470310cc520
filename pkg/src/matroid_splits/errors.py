"""Exception hierarchy shared by every module."""

from __future__ import annotations


class MatroidError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(MatroidError):
    """A candidate base family is not the base family of a matroid."""


class EmptyFamily(ValidationError):
    pass


class MixedCardinality(ValidationError):
    pass


class ElementOutOfRange(ValidationError):
    pass


class ExchangeAxiomViolation(ValidationError):
    """Carries the witness ``(b1, b2, e)``: no ``f`` in ``b2 - b1`` makes ``b1 - e + f`` a base."""

    def __init__(self, b1: tuple[int, ...], b2: tuple[int, ...], e: int):
        self.b1 = b1
        self.b2 = b2
        self.e = e
        super().__init__(
            f"exchange axiom fails for B1={set(b1)}, B2={set(b2)}, e={e}"
        )

    @property
    def witness(self) -> tuple[tuple[int, ...], tuple[int, ...], int]:
        return self.b1, self.b2, self.e


class DeskScaleError(MatroidError):
    """Refusing an exponential computation above the configured size limit."""


class NotCircuitHyperplane(MatroidError):
    pass


class RankOutOfRange(MatroidError):
    pass


class SpecInvalid(MatroidError):
    pass


class UnknownName(MatroidError):
    pass


class VertexNotFound(MatroidError):
    pass


class NotDistanceTwo(MatroidError):
    pass


class UnrecognizedShape(MatroidError):
    """Common neighbourhood matches none of square/pyramid/octahedron."""


class DegeneratePartition(MatroidError):
    pass


class CoverViolation(MatroidError):
    pass


class PartNotMatroid(MatroidError):
    def __init__(self, part: str, violation: ValidationError):
        self.part = part
        self.violation = violation
        super().__init__(f"{part} is not a base family: {violation}")


class PreconditionViolation(MatroidError):
    pass


class NoSplitPoint(MatroidError):
    pass


class ProductFormViolation(MatroidError):
    pass


class ParseError(MatroidError):
    def __init__(self, message: str, location: str = "$"):
        self.location = location
        super().__init__(f"{location}: {message}")
