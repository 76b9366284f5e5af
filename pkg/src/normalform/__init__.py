"""Lower Jordan forms and Poincare-Dulac normal forms with certificates."""

from .jordan import eigenvalues, is_lower_jordan, jordan_basis, jordan_lower, nice_key, spectrum_of_jordan
from .poincare_dulac import (
    NormalFormCertificate,
    exponents_of_degree,
    is_normal_form,
    normal_form_spectrum,
    poincare_dulac,
    spectrum_of,
    verify_conjugacy,
)

__all__ = [
    "eigenvalues",
    "is_lower_jordan",
    "jordan_basis",
    "jordan_lower",
    "nice_key",
    "spectrum_of_jordan",
    "NormalFormCertificate",
    "exponents_of_degree",
    "is_normal_form",
    "normal_form_spectrum",
    "poincare_dulac",
    "spectrum_of",
    "verify_conjugacy",
]
