"""High-precision Dirichlet L-series, prime zeta modulo functions and residue-class constants.

Numbers are returned as decimal strings; wrap them in ``decimal.Decimal`` or
``mpmath.mpf`` as needed.
"""

from ._core import (
    DirichletError,
    DomainError,
    Engine,
    ParseError,
    PoleError,
    UsageError,
    character_table,
    primes_up_to,
    totient,
)

__all__ = [
    "DirichletError",
    "DomainError",
    "Engine",
    "ParseError",
    "PoleError",
    "UsageError",
    "character_table",
    "primes_up_to",
    "totient",
]
