"""Exception hierarchy and the verdict record returned by law checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a law check.

    Truthy when every law held. On failure ``law`` names the first violated
    law and ``witness`` holds the offending elements, always in the caller's
    element space (never internal indices).
    """

    ok: bool
    law: str | None = None
    witness: tuple = ()
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, **details: Any) -> "Verdict":
        return cls(True, details=details)

    @classmethod
    def failed(cls, law: str, *witness: Any, **details: Any) -> "Verdict":
        return cls(False, law, tuple(witness), details)


class IkitError(Exception):
    """Base class; ``witness`` carries the elements that triggered the error."""

    def __init__(self, *witness: Any, message: str | None = None):
        self.witness = tuple(witness)
        super().__init__(message or f"{type(self).__name__}{self.witness!r}")


# order_core
class PosetError(IkitError):
    pass


class ReflexivityViolation(PosetError):
    pass


class AntisymmetryViolation(PosetError):
    pass


class TransitivityViolation(PosetError):
    pass


class NotALattice(IkitError):
    pass


class CapExceeded(IkitError):
    pass


class DomainMismatch(IkitError):
    pass


class CarrierMismatch(DomainMismatch):
    pass


# adjunction
class MeetNotPreserved(IkitError):
    pass


class JoinNotPreserved(IkitError):
    pass


class PreconditionViolated(IkitError):
    pass


# set_subobjects / kuratowski
class NotASubset(IkitError):
    pass


class NotPowersetCarrier(IkitError):
    pass


class NotKuratowski(IkitError):
    pass


class NotATopology(IkitError):
    pass


# sieve_calculus
class CategoryError(IkitError):
    pass


class IdentityLaw(CategoryError):
    pass


class Associativity(CategoryError):
    pass


class CompositionClosure(CategoryError):
    pass


class ObjectMismatch(IkitError):
    pass


# fuzzy
class NotAFuzzyInterior(IkitError):
    pass
