"""Finite fields, discrete logarithms and finite abelian product groups."""

from .field import (
    FieldElement,
    FieldSpec,
    discrete_log,
    field_arith,
    field_create,
    find_generator,
    log_table,
    power_table,
)
from .group import (
    DEFAULT_CEILING,
    AmbientGroup,
    CyclicZ,
    FieldAdditive,
    GroupElement,
    group_create,
    group_enumerate,
    group_op,
)
from .ntheory import divisors, is_prime, prime_factors, primes_between
from .polynomial import Polynomial, is_irreducible, smallest_irreducible

__all__ = [
    "AmbientGroup", "CyclicZ", "DEFAULT_CEILING", "FieldAdditive", "FieldElement",
    "FieldSpec", "GroupElement", "Polynomial", "discrete_log", "divisors",
    "field_arith", "field_create", "find_generator", "group_create",
    "group_enumerate", "group_op", "is_irreducible", "is_prime", "log_table",
    "power_table", "prime_factors", "primes_between", "smallest_irreducible",
]
