"""Exact and empirical shifted-correlation averages of +-1 completely
multiplicative functions: local densities, correlation products over prime
sets, the spectrum of attainable values, and the symmetric-difference closure
machinery over the two-element field."""

from .core import (
    MAX_INPUT,
    BudgetError,
    DiffSet,
    PrimeSet,
    ShiftSet,
    exceptional_primes,
    is_prime,
    liouville,
    omega,
    primes_from,
    shifted_sign,
)
from .density import (
    DensityTrace,
    closed_form_density,
    local_density,
    local_density_trace,
    set_density,
)
from .gf2 import (
    ClosureFamily,
    F2Poly,
    closure_membership,
    derivative,
    encode,
    factor_degrees,
    family_from_generators,
    poly_gcd,
    pow_t_mod,
    squarefree_part,
    two_element_member,
)
from .sieve import (
    DEFAULT_SEGMENT_LENGTH,
    SeriesSample,
    SieveConfig,
    SignSeries,
    empirical_density,
    running_average,
    shifted_parities,
    sieve_parities,
)
from .spectrum import (
    Correlation,
    CorrelationInterval,
    SpectrumDescription,
    construct_prime_set,
    correlation,
    describe_spectrum,
    truncated_correlation,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_INPUT",
    "BudgetError",
    "DiffSet",
    "PrimeSet",
    "ShiftSet",
    "exceptional_primes",
    "is_prime",
    "liouville",
    "omega",
    "primes_from",
    "shifted_sign",
    "DensityTrace",
    "closed_form_density",
    "local_density",
    "local_density_trace",
    "set_density",
    "ClosureFamily",
    "F2Poly",
    "closure_membership",
    "derivative",
    "encode",
    "factor_degrees",
    "family_from_generators",
    "poly_gcd",
    "pow_t_mod",
    "squarefree_part",
    "two_element_member",
    "DEFAULT_SEGMENT_LENGTH",
    "SeriesSample",
    "SieveConfig",
    "SignSeries",
    "empirical_density",
    "running_average",
    "shifted_parities",
    "sieve_parities",
    "Correlation",
    "CorrelationInterval",
    "SpectrumDescription",
    "construct_prime_set",
    "correlation",
    "describe_spectrum",
    "truncated_correlation",
]
