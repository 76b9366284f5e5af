"""Error hierarchy for the quasi-homogenization toolkit.

Every error carries the CLI exit code it maps to, so the front-end can turn
any failure into the documented exit status without a lookup table.
"""

from typing import Optional


class QuasiHomError(Exception):
    """Base class for all library errors."""

    exit_code = 5

    def __init__(self, message: str, stage: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.stage = stage

    def __str__(self) -> str:
        if self.stage:
            return f"[{self.stage}] {self.message}"
        return self.message


class ParseError(QuasiHomError):
    """Malformed coefficient, polynomial or problem document."""

    exit_code = 1

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        location = []
        if field:
            location.append(field)
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            message = f"{', '.join(location)}: {message}"
        super().__init__(message)
        self.field = field
        self.line = line
        self.column = column


class NotContracting(QuasiHomError):
    """An eigenvalue of the linear part has modulus >= 1."""

    exit_code = 2


class SingularLinearPart(QuasiHomError):
    """The linear part has a zero eigenvalue."""

    exit_code = 2


class IrrationalSpectrum(QuasiHomError):
    """The characteristic polynomial has a root outside Q(i)."""

    exit_code = 3


class EigenvalueNotInSpectrumImage(QuasiHomError):
    """An eigenvalue of A0 is not of the form lambda^gamma."""

    exit_code = 3


class NotInvariant(QuasiHomError):
    """The ideal is not mapped into itself by the automorphism."""

    exit_code = 4

    def __init__(self, message: str, index: int, failing_class=None, residual=None):
        super().__init__(message)
        self.index = index
        self.failing_class = failing_class
        self.residual = residual


class DimensionMismatch(QuasiHomError):
    """Objects living in different numbers of variables were combined."""


class NoLinearPart(QuasiHomError):
    """No generator has a nonzero linear part, nothing can be eliminated."""


class InternalInvariantViolation(QuasiHomError):
    """A property guaranteed by construction failed to hold."""


class NotInImage(InternalInvariantViolation):
    """A diagonal entry of A0 has no logarithm in the class set."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class ZeroExtractedGenerator(InternalInvariantViolation):
    """An extracted weighted homogeneous generator vanished."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class Mismatch(InternalInvariantViolation):
    """The extracted generators do not reproduce the input ideal."""

    def __init__(self, message: str, index: int, residual=None):
        super().__init__(message)
        self.index = index
        self.residual = residual


class CertificationError(InternalInvariantViolation):
    """A serialized certificate failed independent re-verification."""
