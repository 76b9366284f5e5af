"""Ordered spectra, resonances, lambda-weight classes and weight vectors."""

from .ordering import (
    Exponent,
    Ordering,
    OrderedSpectrum,
    nicely_order,
    lambda_power,
    lambda_modulus,
    lambda_key,
    lambda_compare,
    total_degree,
    unit_exponent,
)
from .resonance import (
    enumerate_exponents,
    resonance_bound,
    resonance_set,
    normal_form_support,
    is_resonant,
)
from .classes import (
    WeightClass,
    weight_class,
    zero_class,
    log_lambda,
    class_compare,
    class_key,
    class_successor,
    class_add,
    class_difference,
    classes_up_to,
    class_bound_for,
    class_precedes,
)
from .lattice import WeightLattice, relation_lattice, weight_vector

__all__ = [
    "Exponent",
    "Ordering",
    "OrderedSpectrum",
    "nicely_order",
    "lambda_power",
    "lambda_modulus",
    "lambda_key",
    "lambda_compare",
    "total_degree",
    "unit_exponent",
    "enumerate_exponents",
    "resonance_bound",
    "resonance_set",
    "normal_form_support",
    "is_resonant",
    "WeightClass",
    "weight_class",
    "zero_class",
    "log_lambda",
    "class_compare",
    "class_key",
    "class_successor",
    "class_add",
    "class_difference",
    "classes_up_to",
    "class_bound_for",
    "class_precedes",
    "WeightLattice",
    "relation_lattice",
    "weight_vector",
]
