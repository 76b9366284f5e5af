"""Configuration and setup utilities for the quasi-homogenization pipeline."""

import logging
import os
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from .errors import ParseError

PIVOT_ORDERS = ("forward", "reverse")

_configured = False


def setup_environment(level: Optional[str] = None) -> None:
    """Configure logging from QUASIHOM_LOG_LEVEL (default WARNING) once per process."""
    global _configured
    name = (level or os.getenv("QUASIHOM_LOG_LEVEL", "WARNING")).upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        raise ParseError(f"unknown log level {name!r}", field="QUASIHOM_LOG_LEVEL")
    if not _configured:
        logging.basicConfig(format="%(asctime)s %(levelname)s %(name)s: %(message)s")
        _configured = True
    logging.getLogger("src").setLevel(numeric)


@dataclass(frozen=True)
class PipelineOptions:
    """Bounds and switches shared by the pipeline and the CLI.

    degree: truncation degree N; None picks resonance bound + generator degree + 2
    class_bound: representative exponent of the largest constrained class
    """

    degree: Optional[int] = None
    class_bound: Optional[Tuple[int, ...]] = None
    verify: bool = True
    verbose: bool = False
    pivot_order: str = "forward"

    def __post_init__(self):
        if self.degree is not None and self.degree < 1:
            raise ParseError(f"truncation degree must be positive, got {self.degree}", field="degree")
        if self.pivot_order not in PIVOT_ORDERS:
            raise ParseError(f"unknown pivot order {self.pivot_order!r}", field="pivot_order")
        if self.class_bound is not None:
            object.__setattr__(self, "class_bound", tuple(self.class_bound))
            if any(a < 0 for a in self.class_bound):
                raise ParseError("class bound exponents must be non-negative", field="class_bound")


def parse_exponent(text: str, field: str = "class_bound") -> Tuple[int, ...]:
    """'1,2' -> (1, 2)."""
    try:
        return tuple(int(part) for part in text.replace(" ", "").split(","))
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}", field=field) from None


def get_options(**overrides) -> PipelineOptions:
    """PipelineOptions from QUASIHOM_DEGREE / QUASIHOM_CLASS_BOUND, overridden by keyword arguments.

    Overrides equal to None leave the environment value in place.
    """
    options = PipelineOptions()
    degree = os.getenv("QUASIHOM_DEGREE")
    if degree:
        try:
            options = replace(options, degree=int(degree))
        except ValueError:
            raise ParseError(f"expected an integer, got {degree!r}", field="QUASIHOM_DEGREE") from None
    bound = os.getenv("QUASIHOM_CLASS_BOUND")
    if bound:
        options = replace(options, class_bound=parse_exponent(bound, "QUASIHOM_CLASS_BOUND"))
    explicit = {key: value for key, value in overrides.items() if value is not None}
    return replace(options, **explicit)
